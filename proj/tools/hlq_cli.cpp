#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hlq/catalog.hpp"
#include "hlq/identities.hpp"
#include "hlq/suite.hpp"

namespace {

constexpr int kExitUsage = 2;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

struct RunOptions {
  std::string id;
  std::optional<std::string> degree;
  std::optional<std::string> xdeg;
  std::optional<std::string> vars;
  std::optional<std::string> bound;
  std::vector<std::string> partitions;
  std::optional<std::string> mask;
  std::optional<std::string> variant;
  std::optional<std::string> strategy;
  std::vector<std::string> sets;
};

hlq::Json collect_overrides(const hlq::CatalogEntry& e, const RunOptions& o) {
  hlq::Json ov = hlq::Json::object();
  auto put = [&](const std::string& key, const std::string& text) { ov[key] = hlq::coerce_param(e, key, text); };
  if (o.degree) put("N", *o.degree);
  if (o.xdeg) put("D", *o.xdeg);
  if (o.vars) {
    const auto v = split_commas(*o.vars);
    if (v.empty() || v.size() > 2) throw hlq::UsageError("--vars expects n or n,m");
    put("n", v[0]);
    if (v.size() == 2) put("m", v[1]);
  }
  if (o.bound) {
    const auto v = split_commas(*o.bound);
    if (v.size() != 2) throw hlq::UsageError("--bound expects M1,M2");
    put("M1", v[0]);
    put("M2", v[1]);
  }
  if (o.partitions.size() > e.partition_keys.size()) {
    throw hlq::UsageError("identity " + e.id + " takes at most " + std::to_string(e.partition_keys.size()) +
                          " partition(s)");
  }
  for (std::size_t i = 0; i < o.partitions.size(); ++i) put(e.partition_keys[i], o.partitions[i]);
  if (o.mask) put("omega", *o.mask);
  if (o.variant) put(e.defaults.contains("convention") || e.optional.contains("convention") ? "convention" : "variant",
                     *o.variant);
  if (o.strategy) put("strategy", *o.strategy);
  for (const auto& s : o.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw hlq::UsageError("--set expects key=value, got '" + s + "'");
    put(s.substr(0, eq), s.substr(eq + 1));
  }
  return ov;
}

void print_list(bool json) {
  if (json) {
    hlq::Json arr = hlq::Json::array();
    for (const auto& e : hlq::catalog()) {
      arr.push_back({{"identity_id", e.id}, {"title", e.title}, {"group", e.group}, {"defaults", e.defaults},
                     {"optional", e.optional}});
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (const auto& e : hlq::catalog()) {
    std::cout << e.id;
    for (std::size_t i = e.id.size(); i < 18; ++i) std::cout << ' ';
    std::cout << e.title << "  " << e.defaults.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hall-Littlewood and q-series identities"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = hlq::kDefaultSeed;

  auto* list = app.add_subcommand("list", "List identity ids with default parameters");
  list->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  RunOptions ro;
  auto* run = app.add_subcommand("run", "Verify one identity");
  run->add_option("identity_id", ro.id, "Identity id (see `hlq list`)")->required();
  run->add_option("-N,--degree", ro.degree, "q-order");
  run->add_option("-D,--xdeg", ro.xdeg, "x-degree cutoff");
  run->add_option("--vars", ro.vars, "Alphabet sizes n[,m]");
  run->add_option("--bound", ro.bound, "Bounds M1,M2");
  run->add_option("--partition", ro.partitions, "Partition such as 3,1,1 (repeatable)");
  run->add_option("--mask", ro.mask, "Strip mask such as 0110");
  run->add_option("--variant", ro.variant, "Variant or convention");
  run->add_option("--strategy", ro.strategy, "random_points or series");
  run->add_option("--set", ro.sets, "Any parameter as key=value (repeatable)");
  run->add_option("--seed", seed, "Seed for random evaluation points");
  run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string profile = "quick";
  int workers = 0;
  auto* suite = app.add_subcommand("suite", "Run a curated profile");
  suite->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--seed", seed, "Seed for random evaluation points");
  suite->add_option("--workers", workers, "Worker threads (default HLQ_WORKERS or all cores)");
  suite->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string levels = "2,2,2";
  int ansum_degree = 4;
  auto* ansum = app.add_subcommand("ansum", "Print the raw chained sum for a list of alphabet sizes");
  ansum->add_option("--levels", levels, "Variables per level, e.g. 2,1,2");
  ansum->add_option("-D,--xdeg", ansum_degree, "Total degree cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (*list) {
      print_list(json);
      return 0;
    }
    if (*run) {
      const auto& entry = hlq::find_entry(ro.id);
      const auto overrides = collect_overrides(entry, ro);
      hlq::resolve_params(entry, overrides);
      const auto report = hlq::run_entry(entry, overrides, seed);
      std::cout << (json ? report.to_json().dump(2) + "\n" : report.to_text());
      return report.passed() ? 0 : 1;
    }
    if (*suite) {
      const auto report = hlq::run_suite(profile, seed, workers);
      std::cout << (json ? report.to_json().dump(2) + "\n" : report.to_text());
      return report.passed() ? 0 : 1;
    }
    if (*ansum) {
      std::vector<int> per_level;
      for (const auto& s : split_commas(levels)) {
        try {
          per_level.push_back(std::stoi(s));
        } catch (const std::exception&) {
          throw hlq::UsageError("--levels expects integers, got '" + levels + "'");
        }
      }
      int total = 0;
      for (int v : per_level) {
        if (v < 0) throw hlq::UsageError("--levels entries must be nonnegative");
        total += v;
      }
      if (total > hlq::kMaxVars) throw hlq::UsageError("too many variables");
      std::cout << hlq::ansum_series(per_level, ansum_degree).to_string() << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
