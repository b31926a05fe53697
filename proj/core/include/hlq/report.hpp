#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hlq/evaluate.hpp"
#include "hlq/laurent.hpp"
#include "hlq/rational.hpp"
#include "hlq/series.hpp"

namespace hlq {

using Json = nlohmann::ordered_json;

enum class Status { kPass, kFail, kInconclusive };

std::string to_string(Status s);

struct Mismatch {
  std::string where;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity check.
struct VerifyReport {
  std::string identity_id;
  Json params = Json::object();
  Status status = Status::kInconclusive;
  Json checked_bounds = Json::object();
  std::optional<Mismatch> first_mismatch;
  long long runtime_ms = 0;
  std::uint64_t seed = kDefaultSeed;

  bool passed() const { return status == Status::kPass; }
  Json to_json(bool with_runtime = true) const;
  std::string to_text() const;
};

/// Bounds within which every compared coefficient is final.
struct TruncationPlan {
  int x_degree = -1;
  std::optional<int> q_min;
  std::optional<int> q_max;
  std::vector<int> max_weights;
  std::string note;

  Json to_json() const;
};

/// Accumulates exact comparisons and remembers the first disagreement.
///
/// A check passes only if at least one nonconstant coefficient (a monomial
/// other than 1, or a nonzero power of q) or one evaluation point was
/// compared and nothing differed.
class Comparator {
 public:
  void laurent(const std::string& where, const LaurentQ& lhs, const LaurentQ& rhs,
               int q_max = kExact, bool constant_position = false);
  /// Compares every monomial of either side; coefficients are compared
  /// through the smaller q-cap (and q_max).
  void series(const std::string& where, const MultiSeries& lhs, const MultiSeries& rhs,
              std::span<const std::string> names = {}, int q_max = kExact);
  void qseries(const std::string& where, const QSeries& lhs, const QSeries& rhs, int q_max = kExact);
  void rational_q(const std::string& where, const RationalQ& lhs, const RationalQ& rhs);
  void value(const std::string& where, const Rational& lhs, const Rational& rhs);
  void integer(const std::string& where, long long lhs, long long rhs, bool nonconstant = true);
  /// Folds in a finished sub-report.
  void absorb(const VerifyReport& sub);

  bool failed() const { return mismatch_.has_value(); }
  long long compared() const { return compared_; }
  long long nonconstant() const { return nonconstant_; }
  long long points() const { return points_; }
  int observed_q_min() const { return q_lo_; }
  int observed_q_max() const { return q_hi_; }
  const std::optional<Mismatch>& mismatch() const { return mismatch_; }
  Status status() const;

 private:
  void record(const std::string& where, const std::string& lhs, const std::string& rhs);
  void observe(const LaurentQ& f);

  long long compared_ = 0;
  long long nonconstant_ = 0;
  long long points_ = 0;
  long long inconclusive_subs_ = 0;
  int q_lo_ = kExact;
  int q_hi_ = -kExact;
  std::optional<Mismatch> mismatch_;
};

/// Wall-clock stopwatch for report timing.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long elapsed_ms() const;

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Fills status, mismatch, counters and timing from a comparator.
VerifyReport finish_report(std::string id, Json params, const Comparator& cmp, Json bounds,
                           const Stopwatch& clock, std::uint64_t seed = kDefaultSeed);

}  // namespace hlq
