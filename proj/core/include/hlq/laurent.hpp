#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <vector>

namespace hlq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sentinel q-precision meaning "every coefficient is exact".
inline constexpr int kExact = std::numeric_limits<int>::max();

/// cap + delta, where an exact cap stays exact.
inline int cap_add(int cap, long long delta) {
  if (cap == kExact) return kExact;
  const long long v = static_cast<long long>(cap) + delta;
  if (v >= kExact) return kExact - 1;
  if (v <= std::numeric_limits<int>::min()) return std::numeric_limits<int>::min() + 1;
  return static_cast<int>(v);
}

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Dense storage: coeffs()[i] is the coefficient of q^(min_exp() + i).
/// Canonical form keeps the first and last stored coefficient nonzero; the
/// zero value stores nothing.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long c);  // NOLINT(google-explicit-constructor)
  LaurentQ(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentQ monomial(const Integer& c, int exp);
  static LaurentQ q_power(int exp) { return monomial(1, exp); }
  static LaurentQ from_coeffs(int min_exp, std::vector<Integer> coeffs);
  /// 1 - q^exp
  static LaurentQ one_minus_q_power(int exp);

  bool is_zero() const { return c_.empty(); }
  /// Only meaningful for nonzero values.
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int exp) const;
  bool is_polynomial() const { return is_zero() || min_exp_ >= 0; }
  bool is_constant() const { return is_zero() || (c_.size() == 1 && min_exp_ == 0); }
  /// True when the value is +-q^k.
  bool is_unit() const;

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  LaurentQ operator-() const;
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
  }

  /// q^k * f.
  LaurentQ shifted(int k) const;
  /// f(1/q): exponent negation.
  LaurentQ inverted() const;
  /// f(q^k) for k >= 1.
  LaurentQ power_substituted(int k) const;
  /// Drops every term with exponent > max_exp.
  LaurentQ truncated_above(int max_exp) const;

  /// Exact value at a rational q. Throws DenominatorZero when q = 0 and a
  /// negative power is present.
  Rational evaluate(const Rational& q) const;

  std::string to_string() const;

 private:
  void normalize();

  int min_exp_ = 0;
  std::vector<Integer> c_;
};

/// a*b keeping exponents <= max_exp only.
LaurentQ mul_truncated(const LaurentQ& a, const LaurentQ& b, int max_exp);

/// Power-series reciprocal. f must have lowest term +-q^m; the result is
/// correct for every exponent <= max_exp.
LaurentQ inverse_truncated(const LaurentQ& f, int max_exp);

/// a / b, which must divide exactly in Z[q, 1/q]. Throws NotExact otherwise.
LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b);

/// gcd of all coefficients (nonnegative).
Integer content(const LaurentQ& f);

/// gcd in Z[q] of two polynomials (Laurent inputs are treated after clearing
/// q-powers, and the common power of q is included). Positive leading
/// coefficient. gcd(0, 0) = 0.
LaurentQ poly_gcd(const LaurentQ& a, const LaurentQ& b);

/// Pseudo-remainder of a by b (both polynomials, b nonzero).
LaurentQ pseudo_remainder(const LaurentQ& a, const LaurentQ& b);

}  // namespace hlq
