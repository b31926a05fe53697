#include "hlq/pochhammer.hpp"

#include <stdexcept>

#include "hlq/errors.hpp"

namespace hlq {

LaurentQ qpoch(int n) {
  if (n < 0) throw std::invalid_argument("qpoch: negative index");
  LaurentQ r(1);
  for (int i = 1; i <= n; ++i) r *= LaurentQ::one_minus_q_power(i);
  return r;
}

LaurentQ qpoch(const LaurentQ& a, int n) {
  if (n < 0) throw std::invalid_argument("qpoch: negative index");
  LaurentQ r(1);
  for (int i = 0; i < n; ++i) r *= LaurentQ(1) - a.shifted(i);
  return r;
}

RationalQ qpoch_rational(const LaurentQ& a, int n) {
  if (n >= 0) return RationalQ(qpoch(a, n));
  return RationalQ(1) / RationalQ(qpoch(a.shifted(n), -n));
}

RationalQ qpoch_reciprocal(int n) {
  if (n < 0) return RationalQ(0);
  return RationalQ(LaurentQ(1), qpoch(n));
}

LaurentQ qbinom(int n, int m) {
  if (m < 0) return {};
  if (n >= 0 && m > n) return {};
  const LaurentQ num = qpoch(LaurentQ::q_power(n - m + 1), m);
  return divide_exact(num, qpoch(m));
}

LaurentQ qbinom_base(int n, int m, int k) { return qbinom(n, m).power_substituted(k); }

QSeries qpoch_reciprocal_series(int n, int max_exp) {
  if (n < 0) return QSeries(LaurentQ(), max_exp);
  return QSeries(inverse_truncated(qpoch(n), max_exp), max_exp);
}

QSeries qpoch_infinite(const Integer& c, int s, int max_exp) {
  if (s < 1) throw std::invalid_argument("qpoch_infinite: start exponent must be >= 1");
  LaurentQ r(1);
  for (int e = s; e <= max_exp; ++e) {
    r = mul_truncated(r, LaurentQ(1) - LaurentQ::monomial(c, e), max_exp);
  }
  return QSeries(r, max_exp);
}

QSeries qpoch_infinite_step(int s, int step, int max_exp) {
  if (s < 1 || step < 1) throw std::invalid_argument("qpoch_infinite_step: exponents must be >= 1");
  LaurentQ r(1);
  for (int e = s; e <= max_exp; e += step) r = mul_truncated(r, LaurentQ::one_minus_q_power(e), max_exp);
  return QSeries(r, max_exp);
}

QSeries eta_quotient(int modulus, const std::vector<std::pair<int, int>>& residue_exponents, int max_exp) {
  LaurentQ num(1);
  LaurentQ den(1);
  for (const auto& [r, e] : residue_exponents) {
    if (r < 1 || r > modulus) throw std::invalid_argument("eta_quotient: residue out of range");
    for (int n = 1;; ++n) {
      const int exp = modulus * n - modulus + r;
      if (exp > max_exp) break;
      const LaurentQ f = LaurentQ::one_minus_q_power(exp);
      for (int i = 0; i < std::abs(e); ++i) {
        LaurentQ& target = e > 0 ? num : den;
        target = mul_truncated(target, f, max_exp);
      }
    }
  }
  return QSeries(mul_truncated(num, inverse_truncated(den, max_exp), max_exp), max_exp);
}

MultiSeries qpoch_at(const MultiSeries& a, int n) {
  if (n < 0) throw std::invalid_argument("qpoch_at: negative index");
  MultiSeries r = a.constant_like(1);
  for (int i = 0; i < n; ++i) r = r * (a.constant_like(1) - a.scaled(LaurentQ::q_power(i)));
  return r;
}

MultiSeries qpoch_infinite_at(const MultiSeries& a, int max_exp) {
  const int lo = a.min_q_exp();
  MultiSeries r = a.constant_like(1).with_q_cap(max_exp);
  if (a.is_zero()) return r;
  if (lo < 1) throw std::invalid_argument("qpoch_infinite_at: argument must vanish at q = 0");
  for (int i = 0; lo + i <= max_exp; ++i) {
    r = r * (a.constant_like(1) - a.scaled(LaurentQ::q_power(i))).with_q_cap(max_exp);
  }
  return r.with_q_cap(max_exp);
}

}  // namespace hlq
