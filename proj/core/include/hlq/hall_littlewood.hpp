#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hlq/laurent.hpp"
#include "hlq/partition.hpp"
#include "hlq/rational.hpp"
#include "hlq/series.hpp"

namespace hlq {

/// b_lambda(q) = prod_i (q;q)_{m_i(lambda)}.
LaurentQ b_lambda(const Partition& lambda);

/// psi_{lambda/mu}(q); throws std::invalid_argument unless lambda - mu is a
/// horizontal strip.
LaurentQ psi_coeff(const Partition& lambda, const Partition& mu);
/// phi_{lambda/mu}(q); same precondition.
LaurentQ phi_coeff(const Partition& lambda, const Partition& mu);

/// Single-variable skew value c * x^boxes, or the zero marker.
struct SkewTerm {
  bool nonzero = false;
  LaurentQ coeff;
  int boxes = 0;
};
SkewTerm skew_P_single(const Partition& lambda, const Partition& mu);
SkewTerm skew_Q_single(const Partition& lambda, const Partition& mu);

/// Where a symmetric polynomial lives: the ambient series ring (variable
/// count and truncation) and the ambient indices of its own variables.
struct VarSet {
  int num_vars = 0;
  std::vector<int> indices;
  int cutoff = kUnbounded;
  std::vector<int> var_caps;

  /// Variables 0..n-1 of an n-variable ring.
  static VarSet first(int n, int cutoff = kUnbounded);
  MultiSeries one() const;
};

using PartitionTable = std::map<Partition, MultiSeries>;

/// P_{lambda/mu}(x) for every lambda with |lambda| <= max_weight (and
/// |lambda - mu| within the ring's cutoff), computed by adding one variable
/// at a time over horizontal strips. Zero entries are omitted.
PartitionTable skew_P_table(const Partition& mu, const VarSet& vars, int max_weight);
/// P_lambda(x) for every |lambda| <= max_weight.
PartitionTable hl_P_table(const VarSet& vars, int max_weight);
/// Q_{lambda/nu}(x) for every nu contained in lambda (nonzero entries only).
PartitionTable skew_Q_down_table(const Partition& lambda, const VarSet& vars);

MultiSeries skew_P(const Partition& lambda, const Partition& mu, const VarSet& vars);
MultiSeries hl_P(const Partition& lambda, const VarSet& vars);
MultiSeries hl_P(const Partition& lambda, int n, int cutoff = kUnbounded);
MultiSeries hl_Q(const Partition& lambda, int n, int cutoff = kUnbounded);

/// P_lambda(x_1..x_n) by symmetrizing x^lambda prod (x_i - q x_j)/(x_i - x_j).
/// Cost grows like n!; meant as an independent oracle. Throws NotExact if the
/// symmetrization fails to cancel to a polynomial.
MultiSeries hl_P_symmetrization(const Partition& lambda, int n);

/// Exact quotient f / (x_a - x_b); throws NotExact on a remainder.
MultiSeries divide_by_difference(const MultiSeries& f, int a, int b);

/// P_lambda(1, q, ..., q^{n-1}) = q^{n(lambda)} (q;q)_n / ((q;q)_{n-l} b_lambda),
/// times q^{z_shift |lambda|} when evaluated at z = q^{z_shift}.
RationalQ spec_principal_P(const Partition& lambda, int n, int z_shift = 0);

/// Q_lambda(1, q, q^2, ...) = q^{n(lambda)}.
LaurentQ spec_principal_Q_infinite(const Partition& lambda);

/// P_lambda(x; q) at exact rational x, q for every lambda inside the box
/// (at most max_length parts, each at most max_part), where max_length is
/// x.size() unless smaller. Computed by the same strip branching on rationals.
std::map<Partition, Rational> hl_P_values(const std::vector<Rational>& x, const Rational& q, int max_part);

}  // namespace hlq
