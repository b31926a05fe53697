#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlq/laurent.hpp"

namespace hlq {

/// Truncated power series in q. Every coefficient with exponent <= cap() is
/// exact; nothing above the cap is stored. cap() == kExact for finite
/// Laurent polynomials.
///
/// Products track the certified cap: if f is exact through F and g has no
/// term below exponent m, then f*g is exact through F + m.
class QSeries {
 public:
  QSeries() = default;
  QSeries(const LaurentQ& exact) : value_(exact) {}  // NOLINT(google-explicit-constructor)
  QSeries(long c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  QSeries(const LaurentQ& value, int cap);

  const LaurentQ& value() const { return value_; }
  int cap() const { return cap_; }
  bool is_exact() const { return cap_ == kExact; }
  Integer coeff(int e) const { return value_.coeff(e); }
  /// Lowest stored exponent; kExact for the zero series.
  int min_exp() const { return value_.is_zero() ? kExact : value_.min_exp(); }

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries operator-() const;
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }

  QSeries shifted(int k) const;
  /// Lowers the cap (never raises it).
  QSeries truncated(int cap) const;
  /// Reciprocal; the lowest stored term must be +-q^m. An exact input with
  /// more than one term needs an explicit precision.
  QSeries inverse(int precision = kExact) const;

  std::string to_string() const;

 private:
  LaurentQ value_;
  int cap_ = kExact;
};

/// Sparse (possibly Laurent) monomial in up to kMaxVars formal variables.
inline constexpr int kMaxVars = 16;
inline constexpr int kUnbounded = 1 << 28;

struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  static Monomial unit(int var, int power = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(power);
    return m;
  }
  int operator[](int var) const { return e[static_cast<std::size_t>(var)]; }
  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool is_one() const {
    for (auto v : e) {
      if (v != 0) return false;
    }
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
    return m;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::string monomial_to_string(const Monomial& m, int num_vars, std::span<const std::string> names = {});

/// Multivariate series in x_0..x_{n-1} with Laurent-in-q coefficients,
/// truncated to an order ideal of monomials: total degree <= cutoff() and,
/// optionally, per-variable degree caps. Coefficients are exact through
/// q_cap() (kExact when no q truncation has happened).
///
/// Negative x-exponents are allowed only when no x-truncation is in force
/// (cutoff unbounded, no caps); truncation by degree is sound only on
/// nonnegative exponents.
class MultiSeries {
 public:
  using Terms = std::map<Monomial, LaurentQ>;

  MultiSeries() = default;
  explicit MultiSeries(int num_vars, int cutoff = kUnbounded, std::vector<int> var_caps = {});

  static MultiSeries constant(int num_vars, const LaurentQ& c, int cutoff = kUnbounded,
                              std::vector<int> var_caps = {});
  static MultiSeries variable(int num_vars, int var, int cutoff = kUnbounded, std::vector<int> var_caps = {});
  /// A series with the same truncation shape and no terms.
  MultiSeries zero_like() const;
  MultiSeries constant_like(const LaurentQ& c) const;
  MultiSeries monomial_like(const Monomial& m, const LaurentQ& c) const;

  int num_vars() const { return num_vars_; }
  int cutoff() const { return cutoff_; }
  const std::vector<int>& var_caps() const { return var_caps_; }
  int q_cap() const { return q_cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentQ coeff(const Monomial& m) const;
  /// True when the monomial survives the x-truncation.
  bool keeps(const Monomial& m) const;
  /// Smallest q exponent over all coefficients (kExact when zero).
  int min_q_exp() const;
  /// Largest q exponent over all coefficients (kExact when zero).
  int max_q_exp() const;

  /// Adds c*m (dropped if m is truncated away).
  void add_term(const Monomial& m, const LaurentQ& c);

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const MultiSeries& o);
  MultiSeries operator-() const;
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  /// Exact equality of stored terms, caps and truncation shape.
  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

  /// c * f for a Laurent polynomial c.
  MultiSeries scaled(const LaurentQ& c) const;
  /// c * f for a truncated q-series c.
  MultiSeries scaled(const QSeries& c) const;
  /// Restricts to total degree <= d.
  MultiSeries truncated(int d) const;
  /// Truncates every coefficient above q^cap (cap only ever decreases).
  MultiSeries with_q_cap(int cap) const;
  /// x_var -> q^k x_var.
  MultiSeries var_scaled_by_q(int var, int k) const;
  /// Replaces x_var by q^k, keeping num_vars (the variable no longer occurs).
  MultiSeries var_specialized_to_q_power(int var, int k) const;
  /// Re-indexes into a ring with more variables: variable i goes to map[i].
  MultiSeries embedded(int num_vars, std::span<const int> var_map, int cutoff = kUnbounded,
                       std::vector<int> var_caps = {}) const;
  /// Coefficient of x_var^k as a series in the remaining variables.
  MultiSeries coefficient_of(int var, int k) const;

  /// Exact value at a point (all coefficients taken as stored).
  Rational evaluate(std::span<const Rational> x, const Rational& q) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void adopt_shape(const MultiSeries& o);

  int num_vars_ = 0;
  int cutoff_ = kUnbounded;
  std::vector<int> var_caps_;
  int q_cap_ = kExact;
  Terms terms_;
};

/// 1/f up to f's truncation. The constant coefficient must be a q-series
/// whose lowest term is +-q^m; when it is not a monomial, f must carry a
/// finite q_cap (or `q_precision` must be given).
MultiSeries series_inverse(const MultiSeries& f, int q_precision = kExact);

/// f^k for k >= 0.
MultiSeries power(const MultiSeries& f, int k);

}  // namespace hlq
