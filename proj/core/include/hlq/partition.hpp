#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hlq {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are never stored; part(i) for i > length() reads as 0.
/// Indices passed to part() and column() are 1-based, matching the usual
/// lambda_1 >= lambda_2 >= ... notation.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing entries.
  /// Zero entries are accepted only as a trailing tail and are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "6,3,3,1". The empty string and "0" give the zero partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  /// lambda'_j: number of parts >= j.
  int column(int j) const;
  /// True iff mu fits inside this diagram.
  bool contains(const Partition& mu) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// n(lambda) = sum (i-1) lambda_i.
long long n_stat(const Partition& lambda);
/// sum binom(lambda'_i, 2); equal to n_stat by a second route.
long long n_stat_by_columns(const Partition& lambda);

/// <lambda, mu> = sum lambda_i mu_i, zero-padded.
long long dot(const Partition& lambda, const Partition& mu);
long long dot(std::span<const int> a, std::span<const int> b);

/// m_i(lambda).
int multiplicity(const Partition& lambda, int i);

/// True iff mu is contained in lambda and every column of lambda - mu
/// holds at most one square.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

/// A 0/1 vector fixing the first k column increments of a strip.
class StripMask {
 public:
  StripMask() = default;
  /// Throws std::invalid_argument for entries outside {0,1}.
  explicit StripMask(std::vector<int> bits);
  /// Parses a bit string such as "0110".
  static StripMask parse(std::string_view text);
  /// All masks of the given length, in increasing binary order.
  static std::vector<StripMask> all(int length);

  int size() const { return static_cast<int>(bits_.size()); }
  /// 1-based access.
  int operator[](int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> bits() const { return bits_; }
  int ones() const;
  /// J(omega) = { j < k : omega_j = 0, omega_{j+1} = 1 }.
  std::vector<int> ascents() const;
  /// { i < k : omega_i = 1, omega_{i+1} = 0 }.
  std::vector<int> descents() const;
  std::string to_string() const;

  friend bool operator==(const StripMask&, const StripMask&) = default;

 private:
  std::vector<int> bits_;
};

struct EnumerationLimits {
  std::optional<int> max_length;
  std::optional<int> max_part;
};

/// All partitions of `weight` within the limits, reverse-lexicographic.
std::vector<Partition> enumerate_partitions(int weight, EnumerationLimits limits = {});

/// All partitions of weight 0..max_weight, grouped by weight, each group
/// reverse-lexicographic.
std::vector<Partition> enumerate_up_to(int max_weight, EnumerationLimits limits = {});

/// All partitions with <lambda, lambda> <= max_norm (sum of squared parts).
std::vector<Partition> enumerate_by_norm(long long max_norm, EnumerationLimits limits = {});

/// All lambda containing mu such that lambda - mu is a horizontal strip of
/// exactly `boxes` squares, and, when a prefix of length k is given,
/// lambda'_i - mu'_i = prefix_i for i <= k. Reverse-lexicographic.
std::vector<Partition> strips_over(const Partition& mu, int boxes,
                                   const std::optional<StripMask>& prefix = std::nullopt);

/// All nu contained in lambda such that lambda - nu is a horizontal strip.
std::vector<Partition> strips_under(const Partition& lambda);

}  // namespace hlq
