#pragma once

#include <string>

#include "hlq/laurent.hpp"

namespace hlq {

/// Reduced quotient of two polynomials in Z[q].
///
/// Canonical form: numerator and denominator are polynomials (no negative
/// powers), coprime in Z[q], and the denominator has a positive leading
/// coefficient. Zero is 0/1.
class RationalQ {
 public:
  RationalQ() : den_(1) {}
  RationalQ(const LaurentQ& num);  // NOLINT(google-explicit-constructor)
  RationalQ(long c) : RationalQ(LaurentQ(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DenominatorZero for a zero denominator.
  RationalQ(const LaurentQ& num, const LaurentQ& den);

  const LaurentQ& numerator() const { return num_; }
  const LaurentQ& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentQ(1); }
  /// The numerator as a Laurent polynomial once the denominator is a unit
  /// +-q^k; throws NotExact otherwise.
  LaurentQ as_laurent() const;

  RationalQ& operator+=(const RationalQ& o);
  RationalQ& operator-=(const RationalQ& o);
  RationalQ& operator*=(const RationalQ& o);
  RationalQ& operator/=(const RationalQ& o);
  RationalQ operator-() const;
  friend RationalQ operator+(RationalQ a, const RationalQ& b) { return a += b; }
  friend RationalQ operator-(RationalQ a, const RationalQ& b) { return a -= b; }
  friend RationalQ operator*(RationalQ a, const RationalQ& b) { return a *= b; }
  friend RationalQ operator/(RationalQ a, const RationalQ& b) { return a /= b; }
  friend bool operator==(const RationalQ& a, const RationalQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Throws DenominatorZero when the denominator vanishes at q.
  Rational evaluate(const Rational& q) const;
  std::string to_string() const;

 private:
  void canonicalize();

  LaurentQ num_;
  LaurentQ den_;
};

}  // namespace hlq
