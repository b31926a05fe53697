#pragma once

#include <map>
#include <string>
#include <utility>

#include "hlq/laurent.hpp"

namespace hlq {

/// Polynomial in (q, t) with integer coefficients; only nonnegative
/// exponents.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const Integer& c, int qe, int te);
  /// 1 - q^qe t^te
  static BiPoly one_minus(int qe, int te);

  const std::map<Key, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  Rational evaluate(const Rational& q, const Rational& t) const;
  /// The q = 0 specialization as a polynomial in t.
  LaurentQ at_q_zero() const;
  std::string to_string() const;

 private:
  void add(const Key& k, const Integer& c);
  std::map<Key, Integer> terms_;
};

/// Quotient of two BiPoly values, kept unreduced. Equality is decided by
/// cross-multiplication.
class BiRational {
 public:
  BiRational() : den_(1) {}
  BiRational(const BiPoly& num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DenominatorZero for a zero denominator.
  BiRational(const BiPoly& num, const BiPoly& den);

  const BiPoly& numerator() const { return num_; }
  const BiPoly& denominator() const { return den_; }

  BiRational& operator+=(const BiRational& o);
  BiRational& operator*=(const BiRational& o);
  BiRational& operator/=(const BiRational& o);
  friend BiRational operator+(BiRational a, const BiRational& b) { return a += b; }
  friend BiRational operator*(BiRational a, const BiRational& b) { return a *= b; }
  friend BiRational operator/(BiRational a, const BiRational& b) { return a /= b; }
  friend bool operator==(const BiRational& a, const BiRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Throws DenominatorZero when the denominator vanishes at the point.
  Rational evaluate(const Rational& q, const Rational& t) const;
  /// The q = 0 value as a rational function of t (numerator, denominator).
  std::pair<LaurentQ, LaurentQ> at_q_zero() const;
  std::string to_string() const;

 private:
  BiPoly num_;
  BiPoly den_;
};

}  // namespace hlq
