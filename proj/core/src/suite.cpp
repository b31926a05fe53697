#include "hlq/suite.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hlq/errors.hpp"

namespace hlq {

bool SuiteReport::passed() const {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

Json SuiteReport::to_json(bool with_runtime) const {
  Json j;
  j["profile"] = profile;
  j["seed"] = seed;
  j["status"] = passed() ? "pass" : "fail";
  j["count"] = reports.size();
  if (with_runtime) j["runtime_ms"] = runtime_ms;
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(r.to_json(with_runtime));
  j["reports"] = rs;
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  int failed = 0;
  for (const auto& r : reports) {
    os << to_string(r.status) << "  " << r.identity_id << "  " << r.params.dump() << "  " << r.runtime_ms << " ms\n";
    if (!r.passed()) {
      ++failed;
      if (r.first_mismatch) os << "    at " << r.first_mismatch->where << "\n";
    }
  }
  os << "suite " << profile << ": " << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size()
     << " passed, " << runtime_ms << " ms\n";
  return os.str();
}

std::vector<SuiteItem> suite_plan(const std::string& profile) {
  std::vector<SuiteItem> plan;
  for (const auto& e : catalog()) {
    if (profile == "quick") {
      plan.push_back({e.id, e.quick});
    } else if (profile == "full") {
      for (const auto& p : e.full) plan.push_back({e.id, p});
    } else {
      throw UsageError("unknown profile '" + profile + "' (quick or full)");
    }
  }
  return plan;
}

int suite_workers() {
  if (const char* env = std::getenv("HLQ_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

SuiteReport run_suite(const std::string& profile, std::uint64_t seed, int workers) {
  Stopwatch clock;
  const auto plan = suite_plan(profile);
  SuiteReport out;
  out.profile = profile;
  out.seed = seed;
  out.reports.resize(plan.size());
  if (workers <= 0) workers = suite_workers();
  workers = std::min<int>(workers, static_cast<int>(plan.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < plan.size(); i = next++) {
      const auto& item = plan[i];
      try {
        out.reports[i] = run_entry(find_entry(item.id), item.params, seed);
      } catch (const std::exception& ex) {
        VerifyReport r;
        r.identity_id = item.id;
        r.params = item.params;
        r.status = Status::kFail;
        r.first_mismatch = Mismatch{"exception", ex.what(), ""};
        r.seed = seed;
        out.reports[i] = r;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  out.runtime_ms = clock.elapsed_ms();
  return out;
}

}  // namespace hlq
