#pragma once

#include <utility>
#include <vector>

#include "hlq/laurent.hpp"
#include "hlq/rational.hpp"
#include "hlq/series.hpp"

namespace hlq {

/// (q;q)_n = prod_{i=1}^n (1 - q^i). Throws std::invalid_argument for n < 0.
LaurentQ qpoch(int n);

/// (a;q)_n = prod_{i=0}^{n-1} (1 - a q^i) for a Laurent polynomial a, n >= 0.
LaurentQ qpoch(const LaurentQ& a, int n);

/// (a;q)_n for any integer n, with (a;q)_{-m} = 1/(a q^{-m};q)_m.
RationalQ qpoch_rational(const LaurentQ& a, int n);

/// 1/(q;q)_n with the convention 1/(q;q)_{-m} = 0 for m > 0.
RationalQ qpoch_reciprocal(int n);

/// Gaussian binomial [n, m]: (q^{n-m+1};q)_m/(q;q)_m for m >= 0 and 0 for
/// m < 0. For n >= 0 this is 0 when m > n. Exact division; throws NotExact
/// on a remainder.
LaurentQ qbinom(int n, int m);

/// [n, m] in base q^k.
LaurentQ qbinom_base(int n, int m, int k);

/// 1/(q;q)_n as a power series through q^max_exp (zero for n < 0).
QSeries qpoch_reciprocal_series(int n, int max_exp);

/// (c q^s; q)_inf through q^max_exp, s >= 1.
QSeries qpoch_infinite(const Integer& c, int s, int max_exp);

/// (q^s; q^step)_inf through q^max_exp, s >= 1, step >= 1.
QSeries qpoch_infinite_step(int s, int step, int max_exp);

/// prod_{n>=1} prod_{(r,e)} (1 - q^{M n - M + r})^{e} through q^max_exp; e
/// may be negative. 1 <= r <= M.
QSeries eta_quotient(int modulus, const std::vector<std::pair<int, int>>& residue_exponents, int max_exp);

/// (a;q)_n = prod_{i=0}^{n-1} (1 - a q^i) for a series a, n >= 0.
MultiSeries qpoch_at(const MultiSeries& a, int n);

/// (a;q)_inf for a series a all of whose coefficients vanish below q^1,
/// with every coefficient certified through q^max_exp.
MultiSeries qpoch_infinite_at(const MultiSeries& a, int max_exp);

}  // namespace hlq
