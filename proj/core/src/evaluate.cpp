#include "hlq/evaluate.hpp"

#include "hlq/errors.hpp"
#include "hlq/pochhammer.hpp"

namespace hlq {

std::string RationalPoint::to_string() const {
  std::string s;
  for (const auto& [name, v] : values) {
    if (!s.empty()) s += ", ";
    s += name + "=" + rational_to_string(v);
  }
  return s;
}

PointSampler::PointSampler(std::uint64_t seed, long height) : seed_(seed), height_(height), rng_(seed) {}

Rational PointSampler::next() {
  std::uniform_int_distribution<long> num(-height_, height_);
  std::uniform_int_distribution<long> den(1, height_);
  while (true) {
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    if (r != 0 && r != 1 && r != -1) return r;
  }
}

RationalPoint PointSampler::sample(const std::vector<std::string>& names) {
  RationalPoint p;
  p.seed = seed_;
  for (const auto& n : names) p.values[n] = next();
  return p;
}

Rational pow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0) throw DenominatorZero();
    return Rational(1) / pow(x, -e);
  }
  Rational r = 1;
  Rational b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational qpoch_value(const Rational& a, const Rational& q, int n) {
  if (n >= 0) {
    Rational r = 1;
    Rational t = a;
    for (int i = 0; i < n; ++i) {
      r *= 1 - t;
      t *= q;
    }
    return r;
  }
  return checked_div(1, qpoch_value(a * pow(q, n), q, -n));
}

Rational qpoch_reciprocal_value(const Rational& q, int n) {
  if (n < 0) return 0;
  return checked_div(1, qpoch_value(q, q, n));
}

Rational qbinom_value(int n, int m, const Rational& q) { return qbinom(n, m).evaluate(q); }

Rational checked_div(const Rational& a, const Rational& b) {
  if (b == 0) throw DenominatorZero();
  return a / b;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

}  // namespace hlq
