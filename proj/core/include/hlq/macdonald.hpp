#pragma once

#include "hlq/bivariate.hpp"
#include "hlq/partition.hpp"

namespace hlq {

/// Arm and leg of the square (i, j) of lambda (1-based).
struct SquareData {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
};

/// Throws std::invalid_argument unless (i, j) lies in lambda.
SquareData square_data(const Partition& lambda, int i, int j);

/// c'_lambda(q,t) = prod_{s in lambda} (1 - q^{a(s)+1} t^{l(s)}).
BiPoly macdonald_cprime(const Partition& lambda);

/// b_lambda(s) = (1 - q^{a(s)} t^{l(s)+1}) / (1 - q^{a(s)+1} t^{l(s)}); 1 when
/// s is not in lambda.
BiRational macdonald_b(const Partition& lambda, int i, int j);

/// psi_{lambda/mu}(q,t): product of b_mu(s)/b_lambda(s) over squares
/// s = (i,j) of mu with theta_i > 0 and theta'_j = 0.
BiRational macdonald_psi(const Partition& lambda, const Partition& mu);

/// phi_{lambda/mu}(q,t): product of b_lambda(s)/b_mu(s) over squares
/// s = (i,j) of lambda whose column meets the strip (theta'_j > 0).
BiRational macdonald_phi(const Partition& lambda, const Partition& mu);

/// The same product with the ratio inverted, b_mu(s)/b_lambda(s); kept to
/// show that this orientation does not reduce to phi(t) at q = 0.
BiRational macdonald_phi_inverted(const Partition& lambda, const Partition& mu);

}  // namespace hlq
