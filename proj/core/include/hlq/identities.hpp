#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hlq/evaluate.hpp"
#include "hlq/partition.hpp"
#include "hlq/rational.hpp"
#include "hlq/report.hpp"
#include "hlq/series.hpp"

namespace hlq {

using Shift3 = std::array<int, 3>;

// Partition sums in x and y against their product forms. All series are
// truncated at total degree D.

/// sum q^{n(l)+n(m)-<l',m'>} P_l(x) P_m(y) = prod 1/((1-x_i)(1-y_i)) prod (1-x_i y_j)/(1-x_i y_j/q).
VerifyReport verify_main(int n, int m, int D);
/// sum q^{n(l)} P_l(x) = prod 1/(1-x_i).
VerifyReport verify_npsum(int n, int D);
/// Skew-in-x version of verify_main.
VerifyReport verify_cor1(const Partition& nu, int n, int m, int D);
/// Skew in x and y, with Q_{eta/mu}(x/q) on the right. m = 0 is the
/// single-alphabet form.
VerifyReport verify_cor2(const Partition& nu, const Partition& eta, int n, int m, int D);
/// Linear term sum_{l<=j} lambda'_l in the exponent.
VerifyReport verify_cor3(int j, int n, int D);
/// The finite q-series consequence for one (k, j, n).
VerifyReport verify_hall(int k, int j, int n);
/// Every (k, j, n) with k <= k_max, j <= k, n <= n_max.
VerifyReport verify_hall_range(int k_max, int n_max);
/// The n -> infinity form, compared as exact rational functions for k <= k_max.
VerifyReport verify_hall_limit(int k_max);
/// sum P_l(x) Q_l(y) = prod (1 - q x_i y_j)/(1 - x_i y_j).
VerifyReport verify_cauchy(int n, int m, int D);
/// Skew Cauchy identity.
VerifyReport verify_skew_cauchy(const Partition& mu, const Partition& nu, int n, int m, int D);
/// sum q^{n(l)} P_{l/mu}(x) = q^{n(mu)} prod 1/(1-x_i).
VerifyReport verify_sqspec(const Partition& mu, int n, int D);
/// Adding one y-variable z multiplies the two-alphabet sum by
/// (1/(1-z)) prod (1 - z x_i)/(1 - z x_i/q).
VerifyReport verify_rec(int n, int m, int D);

// q-series identities; N is the q-order compared.

/// The bounded two-parameter sum against its Pochhammer quotient, for a,b
/// degrees up to deg_a, deg_b.
VerifyReport verify_cor4(int n, int m, int deg_a, int deg_b, int N);
/// Root-system sum for A_rank against prod over positive roots of
/// 1/(a^alpha q;q)_inf, rank <= 3.
VerifyReport verify_hua(int rank, int deg, int N);
/// Invariance of the bounded sum R_M under the r-transform (rank 2).
VerifyReport verify_lemma_inv(int M1, int M2, int deg_a, int deg_b, int N);
/// Both classical modulus-5 sum/product identities.
VerifyReport verify_rr_classical(int N);
/// Three forms of the A2 modulus-7 series.
VerifyReport verify_rr_a2(int N);
/// Theta-type sum over k1+k2+k3=0 against its product form, specialized
/// with q -> q^{3n+1}, x_i -> q^{n i}; n = 2 is modulus 7. Includes the
/// three-variable Vandermonde identity.
VerifyReport verify_macdonald_a2(int N, int n = 2);
VerifyReport verify_vandermonde();
/// variant: "3n+1", "3n-1" or "3n".
VerifyReport verify_modulus_family(int n, const std::string& variant, int N);

// Bailey-type finite identities.

/// strategy: "random_points" or "series".
VerifyReport verify_bailey_BL(int M1, int M2, const std::string& strategy = "random_points",
                              std::uint64_t seed = kDefaultSeed, int points = kDefaultPoints);
/// Shifted form with k1+k2+k3 = 0 at random (a, b, q). range "support"
/// sums r_1 from -k_3 and r_2 from k_1 when those are negative; "printed"
/// always starts at 0.
VerifyReport verify_bailey_type2(int M1, int M2, const Shift3& k, std::uint64_t seed = kDefaultSeed,
                                 int points = kDefaultPoints, const std::string& range = "support");
/// Every shift with |k_i| <= k_max.
VerifyReport verify_bailey_type2_range(int M1, int M2, int k_max, std::uint64_t seed = kDefaultSeed,
                                       int points = kDefaultPoints, const std::string& range = "support");
/// Both sides of the shifted display at one point.
std::pair<Rational, Rational> bailey_type2_point(int M1, int M2, const Shift3& k, const Rational& a, const Rational& b,
                                                 const Rational& q, const std::string& range = "support");
/// Both sides of the a = b = 1 form as rational functions of q.
std::pair<RationalQ, RationalQ> drie_sides(int M1, int M2, const Shift3& k);
/// a = b = 1 form, compared as canonical rational functions of q.
VerifyReport verify_drie(int M1, int M2, const Shift3& k);
VerifyReport verify_drie_range(int M1, int M2, int k_max);
/// variant: "standard", "q_inverse" or "modulus3n_seed".
VerifyReport verify_euler_a2(int M1, int M2, const std::string& variant);
VerifyReport verify_euler_a2_range(int max_M, const std::string& variant);
VerifyReport verify_it1(int M1, int M2);
VerifyReport verify_it1_range(int max_M);

// Identities used in proving the two-alphabet sum.

VerifyReport verify_phipsi_example();
/// z-series identity between strips over mu and strips under lambda,
/// compared exactly for z-degree <= Dz.
VerifyReport verify_psiphi(const Partition& lambda, const Partition& mu, int Dz);
VerifyReport verify_psiphi_range(int max_weight, int Dz);
/// Strip sums with the first k column increments fixed by omega.
VerifyReport verify_lemma41(const Partition& mu, const StripMask& omega, int Dz);
VerifyReport verify_lemma41_range(int max_weight, int max_mask, int Dz);
/// convention: "without" (b_{k+1}-free form) or "with_k_in_I" (unsplit form).
VerifyReport verify_ab2(int k, const std::string& convention);
VerifyReport verify_ab2_range(int k_max);

// Macdonald-side and bounded identities.

/// variant "q0": the q = 0 reduction; "full" is reported inconclusive.
VerifyReport verify_npsom2(int n, int D, const std::string& variant = "q0");
/// Strip sum with psi(q,t) and c'(q,t) for one mu and z-degree j.
VerifyReport verify_psiqt(const Partition& mu, int j, std::uint64_t seed = kDefaultSeed,
                          int points = kDefaultPoints);
VerifyReport verify_psiqt_range(int max_weight, int max_j, std::uint64_t seed = kDefaultSeed,
                                int points = kDefaultPoints);
/// Specialized A_rank extension of the main identity (rank 2..4) in two x
/// and two y variables.
VerifyReport verify_an_extension(int rank, int D, int N);
VerifyReport verify_a3_isolated(int D, int N);
/// Bounded even-part sum and the companion bounded plain sum at random
/// points, per u-degree k; plus their unbounded truncated forms.
VerifyReport verify_stem(int n, int k_max, std::uint64_t seed = kDefaultSeed, int points = kDefaultPoints);
/// Principal specialization of the bounded even-part sum, exact in z.
VerifyReport verify_st(int n, int k, int Dz);
/// Bounded q^{n(l)} sum at random points per u-degree k.
VerifyReport verify_thmpf(int n, int k_max, std::uint64_t seed = kDefaultSeed, int points = kDefaultPoints);
/// Principal specialization of the bounded sum, both right-side forms.
VerifyReport verify_st2(int n, int k, int Dz);
/// n -> infinity at z = q^z_power.
VerifyReport verify_fulman(int k, int z_power, int N);

/// Raw evaluation of the chained sum over lambda^(1..L) of
/// prod q^{n(l_i) - <l_i', l_{i+1}'>} P_{l_i}(x^(i)), with vars_per_level[i]
/// variables at level i, truncated at total degree D.
MultiSeries ansum_series(const std::vector<int>& vars_per_level, int D);

/// Left side of the bounded two-parameter sum as a series in (a, b), with
/// a-degree <= deg_a, b-degree <= deg_b and q-coefficients through q^N.
MultiSeries pps_lhs_series(int n, int m, int deg_a, int deg_b, int N);
/// R_(M1,M2)(a, b) from its rank-2 definition, same truncation.
MultiSeries bounded_R_series(int M1, int M2, int deg_a, int deg_b, int N);
/// The modulus-7 double sum E1 (with its (q;q)_inf factor) through q^N.
QSeries rr_a2_e1(int N);
/// Right side of a modulus family, (...;q^p)_inf / (q;q)_inf^3, through q^N.
QSeries modulus_family_rhs(int n, const std::string& variant, int N);

}  // namespace hlq
