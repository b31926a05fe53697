#include "hlq/rational.hpp"

#include <algorithm>

#include "hlq/errors.hpp"

namespace hlq {

RationalQ::RationalQ(const LaurentQ& num) : num_(num), den_(1) { canonicalize(); }

RationalQ::RationalQ(const LaurentQ& num, const LaurentQ& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DenominatorZero("RationalQ with zero denominator");
  canonicalize();
}

void RationalQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  // Clear negative powers on both sides with one common shift.
  const int shift = std::max({0, -num_.min_exp(), -den_.min_exp()});
  if (shift > 0) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  const LaurentQ g = poly_gcd(num_, den_);
  if (!(g == LaurentQ(1))) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  if (den_.coeffs().back() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

LaurentQ RationalQ::as_laurent() const {
  if (!den_.is_unit()) throw NotExact("RationalQ is not a Laurent polynomial: " + to_string());
  const LaurentQ scaled = den_.coeffs().front() < 0 ? -num_ : num_;
  return scaled.shifted(-den_.min_exp());
}

RationalQ& RationalQ::operator+=(const RationalQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*d/g).
  const LaurentQ g = poly_gcd(den_, o.den_);
  const LaurentQ bg = divide_exact(den_, g);
  const LaurentQ dg = divide_exact(o.den_, g);
  num_ = num_ * dg + o.num_ * bg;
  den_ = den_ * dg;
  canonicalize();
  return *this;
}

RationalQ& RationalQ::operator-=(const RationalQ& o) { return *this += -o; }

RationalQ RationalQ::operator-() const {
  RationalQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalQ& RationalQ::operator*=(const RationalQ& o) {
  if (is_zero() || o.is_zero()) return *this = RationalQ();
  // Cross-cancel first so the products stay small.
  const LaurentQ g1 = poly_gcd(num_, o.den_);
  const LaurentQ g2 = poly_gcd(o.num_, den_);
  num_ = divide_exact(num_, g1) * divide_exact(o.num_, g2);
  den_ = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  canonicalize();
  return *this;
}

RationalQ& RationalQ::operator/=(const RationalQ& o) {
  if (o.is_zero()) throw DenominatorZero("RationalQ division by zero");
  return *this *= RationalQ(o.den_, o.num_);
}

Rational RationalQ::evaluate(const Rational& q) const {
  const Rational d = den_.evaluate(q);
  if (d == 0) throw DenominatorZero();
  return num_.evaluate(q) / d;
}

std::string RationalQ::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hlq
