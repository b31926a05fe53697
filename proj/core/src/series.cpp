#include "hlq/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlq/errors.hpp"

namespace hlq {

namespace {

int min_int(int a, int b) { return a < b ? a : b; }

LaurentQ cut(const LaurentQ& f, int cap) { return cap == kExact ? f : f.truncated_above(cap); }

}  // namespace

QSeries::QSeries(const LaurentQ& value, int cap) : value_(cut(value, cap)), cap_(cap) {}

QSeries& QSeries::operator+=(const QSeries& o) {
  cap_ = min_int(cap_, o.cap_);
  value_ = cut(value_ + o.value_, cap_);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const QSeries& o) {
  const int cap = min_int(cap_add(cap_, o.min_exp() == kExact ? kExact : o.min_exp()),
                          cap_add(o.cap_, min_exp() == kExact ? kExact : min_exp()));
  // A zero factor makes the product exactly zero.
  if (value_.is_zero() && cap_ == kExact) return *this;
  if (o.value_.is_zero() && o.cap_ == kExact) return *this = QSeries();
  cap_ = cap;
  value_ = cap == kExact ? value_ * o.value_ : mul_truncated(value_, o.value_, cap);
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  r.value_ = -r.value_;
  return r;
}

QSeries QSeries::shifted(int k) const { return QSeries(value_.shifted(k), cap_add(cap_, k)); }

QSeries QSeries::truncated(int cap) const { return QSeries(value_, min_int(cap, cap_)); }

QSeries QSeries::inverse(int precision) const {
  if (value_.is_zero()) throw DenominatorZero("inverse of a zero series");
  const int m = value_.min_exp();
  const Integer lead = value_.coeff(m);
  if (lead != 1 && lead != -1) throw std::invalid_argument("series inverse needs a unit lowest term");
  // f = +-q^m (1 + g) with f known through cap C; 1/f is known through C - 2m.
  int cap = cap_ == kExact ? kExact : cap_add(cap_, -2LL * m);
  if (cap == kExact && !value_.is_unit()) {
    if (precision == kExact) throw std::invalid_argument("inverse of a polynomial needs a precision");
    cap = precision;
  }
  cap = min_int(cap, precision);
  if (cap == kExact) return QSeries(LaurentQ::monomial(lead, -m));
  return QSeries(inverse_truncated(value_, cap), cap);
}

std::string QSeries::to_string() const {
  std::string s = value_.to_string();
  if (cap_ != kExact) s += " + O(q^" + std::to_string(cap_ + 1) + ")";
  return s;
}

std::string monomial_to_string(const Monomial& m, int num_vars, std::span<const std::string> names) {
  std::string s;
  for (int v = 0; v < num_vars; ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += static_cast<std::size_t>(v) < names.size() ? names[static_cast<std::size_t>(v)]
                                                     : "x" + std::to_string(v + 1);
    if (m[v] != 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

MultiSeries::MultiSeries(int num_vars, int cutoff, std::vector<int> var_caps)
    : num_vars_(num_vars), cutoff_(cutoff), var_caps_(std::move(var_caps)) {
  if (num_vars < 0 || num_vars > kMaxVars) throw std::invalid_argument("MultiSeries: too many variables");
  if (!var_caps_.empty() && static_cast<int>(var_caps_.size()) != num_vars) {
    throw std::invalid_argument("MultiSeries: one degree cap per variable expected");
  }
}

MultiSeries MultiSeries::constant(int num_vars, const LaurentQ& c, int cutoff, std::vector<int> var_caps) {
  MultiSeries f(num_vars, cutoff, std::move(var_caps));
  f.add_term(Monomial{}, c);
  return f;
}

MultiSeries MultiSeries::variable(int num_vars, int var, int cutoff, std::vector<int> var_caps) {
  MultiSeries f(num_vars, cutoff, std::move(var_caps));
  f.add_term(Monomial::unit(var), 1);
  return f;
}

MultiSeries MultiSeries::zero_like() const {
  MultiSeries f(num_vars_, cutoff_, var_caps_);
  f.q_cap_ = q_cap_;
  return f;
}

MultiSeries MultiSeries::constant_like(const LaurentQ& c) const { return monomial_like(Monomial{}, c); }

MultiSeries MultiSeries::monomial_like(const Monomial& m, const LaurentQ& c) const {
  MultiSeries f(num_vars_, cutoff_, var_caps_);
  f.add_term(m, c);
  return f;
}

LaurentQ MultiSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentQ() : it->second;
}

bool MultiSeries::keeps(const Monomial& m) const {
  if (cutoff_ != kUnbounded && m.degree() > cutoff_) return false;
  for (std::size_t v = 0; v < var_caps_.size(); ++v) {
    if (m.e[v] > var_caps_[v]) return false;
  }
  return true;
}

int MultiSeries::min_q_exp() const {
  int lo = kExact;
  for (const auto& [m, c] : terms_) lo = std::min(lo, c.min_exp());
  return lo;
}

int MultiSeries::max_q_exp() const {
  if (terms_.empty()) return kExact;
  int hi = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) hi = std::max(hi, c.max_exp());
  return hi;
}

void MultiSeries::add_term(const Monomial& m, const LaurentQ& c) {
  if (c.is_zero() || !keeps(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, cut(c, q_cap_));
  if (!inserted) {
    it->second += cut(c, q_cap_);
    if (it->second.is_zero()) terms_.erase(it);
  } else if (it->second.is_zero()) {
    terms_.erase(it);
  }
}

void MultiSeries::adopt_shape(const MultiSeries& o) {
  if (num_vars_ == 0 && terms_.empty() && cutoff_ == kUnbounded && var_caps_.empty()) {
    num_vars_ = o.num_vars_;
    cutoff_ = o.cutoff_;
    var_caps_ = o.var_caps_;
    return;
  }
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("MultiSeries: variable count mismatch");
  if (o.cutoff_ < cutoff_) {
    cutoff_ = o.cutoff_;
  }
  if (!o.var_caps_.empty()) {
    if (var_caps_.empty()) {
      var_caps_ = o.var_caps_;
    } else {
      for (std::size_t v = 0; v < var_caps_.size(); ++v) var_caps_[v] = std::min(var_caps_[v], o.var_caps_[v]);
    }
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = keeps(it->first) ? std::next(it) : terms_.erase(it);
  }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  adopt_shape(o);
  if (o.q_cap_ < q_cap_) *this = with_q_cap(o.q_cap_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) { return *this += -o; }

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries r = a.zero_like();
  r.adopt_shape(b);
  const int amin = a.min_q_exp();
  const int bmin = b.min_q_exp();
  int cap = kExact;
  if (a.q_cap_ != kExact && bmin != kExact) cap = std::min(cap, cap_add(a.q_cap_, bmin));
  if (b.q_cap_ != kExact && amin != kExact) cap = std::min(cap, cap_add(b.q_cap_, amin));
  if (a.is_zero() && a.q_cap_ == kExact) cap = kExact;
  if (b.is_zero() && b.q_cap_ == kExact) cap = kExact;
  r.q_cap_ = cap;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m = ma * mb;
      if (!r.keeps(m)) continue;
      r.add_term(m, cap == kExact ? ca * cb : mul_truncated(ca, cb, cap));
    }
  }
  return r;
}

MultiSeries& MultiSeries::operator*=(const MultiSeries& o) { return *this = *this * o; }

MultiSeries MultiSeries::scaled(const LaurentQ& c) const { return scaled(QSeries(c)); }

MultiSeries MultiSeries::scaled(const QSeries& c) const {
  MultiSeries r = zero_like();
  const int cmin = c.min_exp();
  const int mine = min_q_exp();
  int cap = kExact;
  if (q_cap_ != kExact && cmin != kExact) cap = std::min(cap, cap_add(q_cap_, cmin));
  if (c.cap() != kExact && mine != kExact) cap = std::min(cap, cap_add(c.cap(), mine));
  if (c.value().is_zero() && c.is_exact()) cap = kExact;
  r.q_cap_ = cap;
  for (const auto& [m, v] : terms_) r.add_term(m, cap == kExact ? v * c.value() : mul_truncated(v, c.value(), cap));
  return r;
}

MultiSeries MultiSeries::truncated(int d) const {
  MultiSeries r = *this;
  r.cutoff_ = std::min(cutoff_, d);
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    it = r.keeps(it->first) ? std::next(it) : r.terms_.erase(it);
  }
  return r;
}

MultiSeries MultiSeries::with_q_cap(int cap) const {
  MultiSeries r = *this;
  r.q_cap_ = std::min(q_cap_, cap);
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    it->second = cut(it->second, r.q_cap_);
    it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
  }
  return r;
}

MultiSeries MultiSeries::var_scaled_by_q(int var, int k) const {
  MultiSeries r = zero_like();
  // Shifting by k*e moves the certified cap by at least min(k*e) over stored e.
  if (q_cap_ != kExact) {
    int lo = 0;
    for (const auto& [m, c] : terms_) lo = std::min(lo, k * m[var]);
    if (k < 0) {
      int hi = cutoff_ != kUnbounded ? cutoff_ : 0;
      if (!var_caps_.empty()) hi = std::min(hi, var_caps_[static_cast<std::size_t>(var)]);
      lo = std::min(lo, k * hi);
    }
    r.q_cap_ = cap_add(q_cap_, lo);
  }
  for (const auto& [m, c] : terms_) r.add_term(m, c.shifted(k * m[var]));
  return r;
}

MultiSeries MultiSeries::var_specialized_to_q_power(int var, int k) const {
  MultiSeries r = zero_like();
  if (q_cap_ != kExact && k < 0) throw std::invalid_argument("negative specialization of a truncated series");
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.e[static_cast<std::size_t>(var)] = 0;
    r.add_term(mm, c.shifted(k * m[var]));
  }
  return r;
}

MultiSeries MultiSeries::embedded(int num_vars, std::span<const int> var_map, int cutoff,
                                  std::vector<int> var_caps) const {
  MultiSeries r(num_vars, cutoff, std::move(var_caps));
  r.q_cap_ = q_cap_;
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (int v = 0; v < num_vars_; ++v) {
      if (m[v] == 0) continue;
      mm.e[static_cast<std::size_t>(var_map[static_cast<std::size_t>(v)])] =
          static_cast<std::int16_t>(mm.e[static_cast<std::size_t>(var_map[static_cast<std::size_t>(v)])] + m[v]);
    }
    r.add_term(mm, c);
  }
  return r;
}

MultiSeries MultiSeries::coefficient_of(int var, int k) const {
  MultiSeries r = zero_like();
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial mm = m;
    mm.e[static_cast<std::size_t>(var)] = 0;
    r.add_term(mm, c);
  }
  return r;
}

Rational MultiSeries::evaluate(std::span<const Rational> x, const Rational& q) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c.evaluate(q);
    for (int v = 0; v < num_vars_; ++v) {
      const int e = m[v];
      if (e == 0) continue;
      const Rational& base = x[static_cast<std::size_t>(v)];
      if (base == 0 && e < 0) throw DenominatorZero();
      Rational p = 1;
      for (int i = 0; i < std::abs(e); ++i) p *= base;
      term *= e > 0 ? p : Rational(1) / p;
    }
    total += term;
  }
  return total;
}

std::string MultiSeries::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (!m.is_one()) s += "*" + monomial_to_string(m, num_vars_, names);
  }
  if (q_cap_ != kExact) s += " + O(q^" + std::to_string(q_cap_ + 1) + ")";
  return s;
}

MultiSeries series_inverse(const MultiSeries& f, int q_precision) {
  const LaurentQ c0 = f.coeff(Monomial{});
  QSeries head(c0, f.q_cap());
  const QSeries h = head.inverse(q_precision);
  MultiSeries tail = f;
  tail.add_term(Monomial{}, -c0);
  // 1/f = h * sum_k (-h*tail)^k; the x-degree cutoff ends the sum.
  const MultiSeries step = -tail.scaled(h);
  MultiSeries result = f.constant_like(1).scaled(h);
  MultiSeries power_k = f.constant_like(1);
  const bool bounded = f.cutoff() != kUnbounded || !f.var_caps().empty();
  if (!bounded && !tail.is_zero()) throw std::invalid_argument("series_inverse needs an x-truncation");
  while (true) {
    power_k = power_k * step;
    if (power_k.is_zero()) break;
    result += power_k.scaled(h);
  }
  return result;
}

MultiSeries power(const MultiSeries& f, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  MultiSeries r = f.constant_like(1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

}  // namespace hlq
