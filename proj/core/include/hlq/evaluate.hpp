#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hlq/laurent.hpp"

namespace hlq {

inline constexpr std::uint64_t kDefaultSeed = 0x484C51;
inline constexpr int kDefaultPoints = 20;
inline constexpr long kDefaultHeight = 10000;

/// Exact values assigned to named variables.
struct RationalPoint {
  std::map<std::string, Rational> values;
  std::uint64_t seed = kDefaultSeed;

  const Rational& operator[](const std::string& name) const { return values.at(name); }
  std::string to_string() const;
};

/// Deterministic source of random rationals p/d with |p| <= height,
/// 1 <= d <= height. Zero and +-1 are never produced.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed = kDefaultSeed, long height = kDefaultHeight);

  Rational next();
  RationalPoint sample(const std::vector<std::string>& names);
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  long height_;
  std::mt19937_64 rng_;
};

Rational pow(const Rational& x, int e);

/// (a;q)_n at rational a, q for any integer n, using (a;q)_{-m} = 1/(aq^{-m};q)_m.
/// Throws DenominatorZero when a reciprocal factor vanishes.
Rational qpoch_value(const Rational& a, const Rational& q, int n);

/// 1/(q;q)_n with 1/(q;q)_{-m} = 0.
Rational qpoch_reciprocal_value(const Rational& q, int n);

/// Exact value of the Gaussian binomial at q.
Rational qbinom_value(int n, int m, const Rational& q);

/// Throws DenominatorZero for a zero divisor.
Rational checked_div(const Rational& a, const Rational& b);

std::string rational_to_string(const Rational& x);

}  // namespace hlq
