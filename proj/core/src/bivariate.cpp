#include "hlq/bivariate.hpp"

#include "hlq/errors.hpp"
#include "hlq/evaluate.hpp"

namespace hlq {

BiPoly::BiPoly(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(const Integer& c, int qe, int te) {
  BiPoly p;
  p.add({qe, te}, c);
  return p;
}

BiPoly BiPoly::one_minus(int qe, int te) { return BiPoly(1) - monomial(1, qe, te); }

void BiPoly::add(const Key& k, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return r;
}

Rational BiPoly::evaluate(const Rational& q, const Rational& t) const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) s += Rational(c) * pow(q, k.first) * pow(t, k.second);
  return s;
}

LaurentQ BiPoly::at_q_zero() const {
  LaurentQ r;
  for (const auto& [k, c] : terms_) {
    if (k.first == 0) r += LaurentQ::monomial(c, k.second);
  }
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    if (k.first) s += "*q^" + std::to_string(k.first);
    if (k.second) s += "*t^" + std::to_string(k.second);
  }
  return s;
}

BiRational::BiRational(const BiPoly& num, const BiPoly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw DenominatorZero();
}

BiRational& BiRational::operator+=(const BiRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  return *this;
}

BiRational& BiRational::operator*=(const BiRational& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  return *this;
}

BiRational& BiRational::operator/=(const BiRational& o) {
  if (o.num_.is_zero()) throw DenominatorZero();
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  return *this;
}

Rational BiRational::evaluate(const Rational& q, const Rational& t) const {
  return checked_div(num_.evaluate(q, t), den_.evaluate(q, t));
}

std::pair<LaurentQ, LaurentQ> BiRational::at_q_zero() const {
  const LaurentQ d = den_.at_q_zero();
  if (d.is_zero()) throw DenominatorZero("denominator vanishes at q = 0");
  return {num_.at_q_zero(), d};
}

std::string BiRational::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

}  // namespace hlq
