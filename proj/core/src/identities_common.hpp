#pragma once

// Helpers shared by the identity verifiers; not installed.

#include <string>
#include <vector>

#include "hlq/hall_littlewood.hpp"
#include "hlq/identities.hpp"
#include "hlq/pochhammer.hpp"

namespace hlq::detail {

inline std::vector<std::string> var_names(const std::string& prefix, int count, int first = 1) {
  std::vector<std::string> v;
  for (int i = 0; i < count; ++i) v.push_back(prefix + std::to_string(first + i));
  return v;
}

inline std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Variables [first, first+count) of a ring with num_vars variables.
inline VarSet block(int num_vars, int first, int count, int cutoff) {
  VarSet v;
  v.num_vars = num_vars;
  v.cutoff = cutoff;
  for (int i = 0; i < count; ++i) v.indices.push_back(first + i);
  return v;
}

/// n(l) + n(m) - <l', m'>.
inline long long pid_exponent(const Partition& l, const Partition& m) {
  return n_stat(l) + n_stat(m) - dot(l.conjugate(), m.conjugate());
}

/// sum over table pairs of q^{pid_exponent} X[l] Y[m].
MultiSeries pid_pair_sum(const PartitionTable& x, const PartitionTable& y);

/// prod_{v in vars} 1/(1 - x_v).
MultiSeries geometric_product(const MultiSeries& one, const std::vector<int>& vars);

/// prod_{i in xs, j in ys} (1 - x_i y_j)/(1 - q^{-1} x_i y_j).
MultiSeries pair_product(const MultiSeries& one, const std::vector<int>& xs, const std::vector<int>& ys);

/// prod_{i,j} (1 - q x_i y_j)/(1 - x_i y_j).
MultiSeries cauchy_product(const MultiSeries& one, const std::vector<int>& xs, const std::vector<int>& ys);

/// All (k1, k2, k3) with k1 + k2 + k3 = 0 and |k_i| <= bound.
std::vector<Shift3> zero_sum_triples(int bound);

/// The six permutations of {1,2,3} (as w_i values) with their signs.
struct Perm3 {
  std::array<int, 3> w;
  int sign;
};
const std::vector<Perm3>& permutations3();

}  // namespace hlq::detail
