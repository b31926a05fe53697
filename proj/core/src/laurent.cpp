#include "hlq/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlq/errors.hpp"

namespace hlq {

LaurentQ::LaurentQ(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentQ::LaurentQ(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

LaurentQ LaurentQ::monomial(const Integer& c, int exp) {
  LaurentQ f;
  if (c != 0) {
    f.min_exp_ = exp;
    f.c_.push_back(c);
  }
  return f;
}

LaurentQ LaurentQ::from_coeffs(int min_exp, std::vector<Integer> coeffs) {
  LaurentQ f;
  f.min_exp_ = min_exp;
  f.c_ = std::move(coeffs);
  f.normalize();
  return f;
}

LaurentQ LaurentQ::one_minus_q_power(int exp) { return LaurentQ(1) - q_power(exp); }

Integer LaurentQ::coeff(int exp) const {
  const long long i = static_cast<long long>(exp) - min_exp_;
  if (i < 0 || i >= static_cast<long long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

bool LaurentQ::is_unit() const { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }

void LaurentQ::normalize() {
  std::size_t lo = 0;
  while (lo < c_.size() && c_[lo] == 0) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    min_exp_ = 0;
    return;
  }
  std::size_t hi = c_.size();
  while (c_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < c_.size()) {
    c_ = std::vector<Integer>(c_.begin() + static_cast<std::ptrdiff_t>(lo),
                              c_.begin() + static_cast<std::ptrdiff_t>(hi));
    min_exp_ += static_cast<int>(lo);
  }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_exp_, o.min_exp_);
  const int hi = std::max(max_exp(), o.max_exp());
  if (lo < min_exp_ || hi > max_exp()) {
    std::vector<Integer> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) grown[static_cast<std::size_t>(min_exp_ - lo) + i].swap(c_[i]);
    c_.swap(grown);
    min_exp_ = lo;
  }
  const auto off = static_cast<std::size_t>(o.min_exp_ - min_exp_);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[off + i] += o.c_[i];
  normalize();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return LaurentQ::from_coeffs(a.min_exp_ + b.min_exp_, std::move(out));
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) { return *this = *this * o; }

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r = *this;
  if (!r.is_zero()) r.min_exp_ += k;
  return r;
}

LaurentQ LaurentQ::inverted() const {
  if (is_zero()) return {};
  std::vector<Integer> rev(c_.rbegin(), c_.rend());
  return from_coeffs(-max_exp(), std::move(rev));
}

LaurentQ LaurentQ::power_substituted(int k) const {
  if (k < 1) throw std::invalid_argument("power_substituted: k must be >= 1");
  if (is_zero() || k == 1) return *this;
  std::vector<Integer> out((c_.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(k)] = c_[i];
  return from_coeffs(min_exp_ * k, std::move(out));
}

LaurentQ LaurentQ::truncated_above(int max_exp_keep) const {
  if (is_zero() || max_exp() <= max_exp_keep) return *this;
  if (max_exp_keep < min_exp_) return {};
  std::vector<Integer> out(c_.begin(), c_.begin() + (max_exp_keep - min_exp_ + 1));
  return from_coeffs(min_exp_, std::move(out));
}

Rational LaurentQ::evaluate(const Rational& q) const {
  if (is_zero()) return 0;
  if (q == 0) {
    if (min_exp_ < 0) throw DenominatorZero("negative power of q evaluated at q = 0");
    return Rational(coeff(0));
  }
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += Rational(*it);
  }
  Rational qpow = 1;
  const int e = min_exp_ < 0 ? -min_exp_ : min_exp_;
  mpz_pow_ui(qpow.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(qpow.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  qpow.canonicalize();
  return min_exp_ < 0 ? Rational(acc / qpow) : Rational(acc * qpow);
}

std::string LaurentQ::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    const int e = min_exp_ + static_cast<int>(i);
    const bool neg = c < 0;
    Integer mag = abs(c);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (e == 0) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += "q";
      if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
  }
  return s;
}

LaurentQ mul_truncated(const LaurentQ& a, const LaurentQ& b, int max_exp) {
  if (a.is_zero() || b.is_zero()) return {};
  if (max_exp == kExact) return a * b;
  const long long lo = static_cast<long long>(a.min_exp()) + b.min_exp();
  if (lo > max_exp) return {};
  const auto len = static_cast<std::size_t>(std::min<long long>(
      static_cast<long long>(a.coeffs().size() + b.coeffs().size() - 1), max_exp - lo + 1));
  std::vector<Integer> out(len);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size() && i < len; ++i) {
    if (ac[i] == 0) continue;
    const std::size_t jmax = std::min(bc.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return LaurentQ::from_coeffs(static_cast<int>(lo), std::move(out));
}

LaurentQ inverse_truncated(const LaurentQ& f, int max_exp) {
  if (f.is_zero()) throw DenominatorZero("inverse of zero series");
  const Integer& lead = f.coeffs().front();
  if (lead != 1 && lead != -1) {
    throw std::invalid_argument("inverse_truncated: lowest coefficient must be +-1");
  }
  const int m = f.min_exp();
  // 1/f = q^{-m} / g with g = q^{-m} f having constant term +-1.
  const long long rel = static_cast<long long>(max_exp) + m;
  if (rel < 0) return {};
  const auto len = static_cast<std::size_t>(rel + 1);
  const auto& g = f.coeffs();
  std::vector<Integer> h(len);
  h[0] = lead;  // 1/(+-1) = +-1
  Integer acc;
  for (std::size_t k = 1; k < len; ++k) {
    acc = 0;
    const std::size_t jmax = std::min(k, g.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      mpz_addmul(acc.get_mpz_t(), g[j].get_mpz_t(), h[k - j].get_mpz_t());
    }
    h[k] = lead == 1 ? Integer(-acc) : acc;
  }
  return LaurentQ::from_coeffs(-m, std::move(h));
}

namespace {

// Polynomials as coefficient vectors indexed by exponent, no trailing zeros.
using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const LaurentQ& f) {
  if (f.is_zero()) return {};
  if (f.min_exp() < 0) throw std::invalid_argument("expected a polynomial in q");
  Poly p(static_cast<std::size_t>(f.min_exp()), Integer(0));
  p.insert(p.end(), f.coeffs().begin(), f.coeffs().end());
  return p;
}

LaurentQ from_poly(Poly p) { return LaurentQ::from_coeffs(0, std::move(p)); }

Integer poly_content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Poly& p) {
  if (p.empty()) return;
  Integer g = poly_content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

Poly prem(Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("pseudo-remainder by zero");
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

Integer content(const LaurentQ& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentQ pseudo_remainder(const LaurentQ& a, const LaurentQ& b) { return from_poly(prem(to_poly(a), to_poly(b))); }

LaurentQ poly_gcd(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    LaurentQ g = a.is_zero() ? b : a;
    if (g.coeffs().back() < 0) g = -g;
    return g;
  }
  // Common power of q, then the gcd of the q-free parts.
  const int qpow = std::min(a.min_exp(), b.min_exp());
  Poly pa = to_poly(a.shifted(-a.min_exp()));
  Poly pb = to_poly(b.shifted(-b.min_exp()));
  Integer cg;
  const Integer ca = poly_content(pa);
  const Integer cb = poly_content(pb);
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  make_primitive(pa);
  make_primitive(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    Poly r = prem(pa, pb);
    make_primitive(r);
    pa = std::move(pb);
    pb = std::move(r);
  }
  make_primitive(pa);
  for (auto& c : pa) c *= cg;
  return from_poly(std::move(pa)).shifted(qpow);
}

LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw DenominatorZero("division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  if (ac.size() < bc.size()) throw NotExact("divide_exact: remainder is nonzero");
  // Long division from the top on the dense windows; both windows start at
  // a nonzero coefficient, so the q-power of the quotient is the difference.
  std::vector<Integer> rem(ac);
  const std::size_t qlen = ac.size() - bc.size() + 1;
  std::vector<Integer> quot(qlen);
  const Integer& lb = bc.back();
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = rem[k + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw NotExact("divide_exact: non-integral quotient");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i < bc.size(); ++i) mpz_submul(rem[k + i].get_mpz_t(), c.get_mpz_t(), bc[i].get_mpz_t());
    quot[k] = std::move(c);
  }
  for (const auto& r : rem) {
    if (r != 0) throw NotExact("divide_exact: remainder is nonzero");
  }
  return LaurentQ::from_coeffs(a.min_exp() - b.min_exp(), std::move(quot));
}

}  // namespace hlq
