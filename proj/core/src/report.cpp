#include "hlq/report.hpp"

#include <algorithm>
#include <sstream>

namespace hlq {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Json VerifyReport::to_json(bool with_runtime) const {
  Json j;
  j["identity_id"] = identity_id;
  j["params"] = params;
  j["status"] = to_string(status);
  j["checked_bounds"] = checked_bounds;
  if (first_mismatch) {
    j["first_mismatch"] = {{"where", first_mismatch->where}, {"lhs", first_mismatch->lhs}, {"rhs", first_mismatch->rhs}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  if (with_runtime) j["runtime_ms"] = runtime_ms;
  j["seed"] = seed;
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << identity_id << ": " << to_string(status) << " (" << runtime_ms << " ms)\n";
  os << "  params: " << params.dump() << "\n";
  os << "  checked: " << checked_bounds.dump() << "\n";
  if (first_mismatch) {
    os << "  first mismatch at " << first_mismatch->where << "\n    lhs = " << first_mismatch->lhs
       << "\n    rhs = " << first_mismatch->rhs << "\n";
  }
  return os.str();
}

Json TruncationPlan::to_json() const {
  Json j;
  if (x_degree >= 0) j["x_degree"] = x_degree;
  if (q_min) j["q_min"] = *q_min;
  if (q_max) j["q_max"] = *q_max;
  if (!max_weights.empty()) j["max_weights"] = max_weights;
  j["derivation"] = note;
  return j;
}

void Comparator::record(const std::string& where, const std::string& lhs, const std::string& rhs) {
  if (!mismatch_) mismatch_ = Mismatch{where, lhs, rhs};
}

void Comparator::observe(const LaurentQ& f) {
  if (f.is_zero()) return;
  q_lo_ = std::min(q_lo_, f.min_exp());
  q_hi_ = std::max(q_hi_, f.max_exp());
}

void Comparator::laurent(const std::string& where, const LaurentQ& lhs, const LaurentQ& rhs, int q_max,
                         bool constant_position) {
  const LaurentQ a = q_max == kExact ? lhs : lhs.truncated_above(q_max);
  const LaurentQ b = q_max == kExact ? rhs : rhs.truncated_above(q_max);
  observe(a);
  observe(b);
  ++compared_;
  const bool varies = !(a.is_zero() || a.is_constant()) || !(b.is_zero() || b.is_constant());
  if (varies || (!constant_position && !(a.is_zero() && b.is_zero()))) ++nonconstant_;
  if (!(a == b)) {
    // Locate the first differing power for the diagnostic.
    const LaurentQ d = a - b;
    const int e = d.min_exp();
    record(where + " [q^" + std::to_string(e) + "]", a.coeff(e).get_str(), b.coeff(e).get_str());
  }
}

void Comparator::series(const std::string& where, const MultiSeries& lhs, const MultiSeries& rhs,
                        std::span<const std::string> names, int q_max) {
  const int cap = std::min({q_max, lhs.q_cap(), rhs.q_cap()});
  std::vector<Monomial> keys;
  for (const auto& [m, c] : lhs.terms()) keys.push_back(m);
  for (const auto& [m, c] : rhs.terms()) keys.push_back(m);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& m : keys) {
    const std::string at = where + " at " + monomial_to_string(m, lhs.num_vars(), names);
    laurent(at, lhs.coeff(m), rhs.coeff(m), cap, m.is_one());
  }
  if (keys.empty()) ++compared_;
}

void Comparator::qseries(const std::string& where, const QSeries& lhs, const QSeries& rhs, int q_max) {
  laurent(where, lhs.value(), rhs.value(), std::min({q_max, lhs.cap(), rhs.cap()}), true);
}

void Comparator::rational_q(const std::string& where, const RationalQ& lhs, const RationalQ& rhs) {
  ++compared_;
  const bool constant = lhs.numerator().is_constant() && lhs.denominator().is_constant() &&
                        rhs.numerator().is_constant() && rhs.denominator().is_constant();
  if (!constant) ++nonconstant_;
  if (!(lhs == rhs)) record(where, lhs.to_string(), rhs.to_string());
}

void Comparator::value(const std::string& where, const Rational& lhs, const Rational& rhs) {
  ++compared_;
  ++points_;
  ++nonconstant_;
  if (lhs != rhs) record(where, rational_to_string(lhs), rational_to_string(rhs));
}

void Comparator::integer(const std::string& where, long long lhs, long long rhs, bool nonconstant) {
  ++compared_;
  if (nonconstant) ++nonconstant_;
  if (lhs != rhs) record(where, std::to_string(lhs), std::to_string(rhs));
}

void Comparator::absorb(const VerifyReport& sub) {
  if (sub.first_mismatch) record(sub.identity_id + " " + sub.first_mismatch->where, sub.first_mismatch->lhs,
                                 sub.first_mismatch->rhs);
  ++compared_;
  if (sub.status == Status::kPass) ++nonconstant_;
  if (sub.status == Status::kFail && !mismatch_) record(sub.identity_id, "fail", "pass");
}

Status Comparator::status() const {
  if (mismatch_) return Status::kFail;
  return nonconstant_ > 0 ? Status::kPass : Status::kInconclusive;
}

long long Stopwatch::elapsed_ms() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
}

VerifyReport finish_report(std::string id, Json params, const Comparator& cmp, Json bounds, const Stopwatch& clock,
                           std::uint64_t seed) {
  VerifyReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.status = cmp.status();
  r.first_mismatch = cmp.mismatch();
  if (!bounds.is_object()) bounds = Json::object();
  bounds["compared"] = cmp.compared();
  bounds["nonconstant_compared"] = cmp.nonconstant();
  if (cmp.points() > 0) bounds["points"] = cmp.points();
  if (cmp.observed_q_min() != kExact) {
    bounds["observed_q_range"] = {cmp.observed_q_min(), cmp.observed_q_max()};
  }
  r.checked_bounds = std::move(bounds);
  r.runtime_ms = clock.elapsed_ms();
  r.seed = seed;
  return r;
}

}  // namespace hlq
