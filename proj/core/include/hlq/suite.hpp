#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlq/catalog.hpp"

namespace hlq {

struct SuiteItem {
  std::string id;
  Json params;
};

struct SuiteReport {
  std::string profile;
  std::uint64_t seed = kDefaultSeed;
  std::vector<VerifyReport> reports;
  long long runtime_ms = 0;

  /// Fails iff any member did not pass.
  bool passed() const;
  Json to_json(bool with_runtime = true) const;
  std::string to_text() const;
};

/// "quick": every catalog id once at small size. "full": the larger runs.
std::vector<SuiteItem> suite_plan(const std::string& profile);

/// Worker count: HLQ_WORKERS if set (>= 1), else hardware concurrency.
int suite_workers();

/// Runs the plan on up to `workers` threads; reports keep plan order.
SuiteReport run_suite(const std::string& profile, std::uint64_t seed = kDefaultSeed, int workers = 0);

}  // namespace hlq
