#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hlq/report.hpp"

namespace hlq {

/// Thrown for bad identity ids or parameters, before any computation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One verifiable identity with its parameter sizes.
struct CatalogEntry {
  std::string id;
  std::string title;
  std::string group;
  /// Parameters and their types (int or string); also the default run.
  Json defaults = Json::object();
  /// Extra keys that switch to a single-case run; values give the type.
  Json optional = Json::object();
  /// Keys holding partitions, in the order --partition fills them.
  std::vector<std::string> partition_keys;
  Json quick = Json::object();
  std::vector<Json> full;
  std::function<VerifyReport(const Json&, std::uint64_t)> run;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UsageError for an unknown id.
const CatalogEntry& find_entry(const std::string& id);

/// defaults + overrides, checked: unknown keys, wrong types and malformed
/// partitions, masks or shifts raise UsageError.
Json resolve_params(const CatalogEntry& e, const Json& overrides);

/// Converts a command-line string to the type the entry expects for key.
Json coerce_param(const CatalogEntry& e, const std::string& key, const std::string& text);

VerifyReport run_entry(const CatalogEntry& e, const Json& overrides, std::uint64_t seed = kDefaultSeed);

}  // namespace hlq
