#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "hlq/catalog.hpp"
#include "hlq/suite.hpp"

using namespace hlq;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HLQ_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(Catalog, HasTheExpectedIds) {
  const auto& c = catalog();
  EXPECT_GE(c.size(), 20u);
  std::set<std::string> ids;
  for (const auto& e : c) {
    EXPECT_TRUE(ids.insert(e.id).second) << "duplicate " << e.id;
    EXPECT_FALSE(e.title.empty());
    EXPECT_FALSE(e.full.empty()) << e.id;
  }
  for (const char* id : {"pid.main", "family.3n+1", "family.3n-1", "family.3n", "rr.a2", "bl.bailey"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Catalog, QuickPlanTouchesEveryIdOnce) {
  std::map<std::string, int> seen;
  for (const auto& item : suite_plan("quick")) ++seen[item.id];
  EXPECT_EQ(seen.size(), catalog().size());
  for (const auto& [id, n] : seen) EXPECT_EQ(n, 1) << id;
  EXPECT_GE(suite_plan("full").size(), catalog().size());
  EXPECT_THROW(suite_plan("medium"), UsageError);
}

TEST(Catalog, ResolveParams) {
  const auto& e = find_entry("pid.main");
  const auto p = resolve_params(e, {{"D", 3}});
  EXPECT_EQ(p["D"], 3);
  EXPECT_EQ(p["n"], 2);
  EXPECT_THROW(resolve_params(e, {{"bogus", 1}}), UsageError);
  EXPECT_THROW(resolve_params(e, {{"D", "three"}}), UsageError);
  EXPECT_THROW(find_entry("nosuch"), UsageError);
  const auto& s = find_entry("hl.sqspec");
  EXPECT_THROW(resolve_params(s, {{"mu", "1,2"}}), UsageError);
  const auto& t = find_entry("bl.type2");
  EXPECT_THROW(resolve_params(t, {{"k", "1,1,0"}}), UsageError);
  EXPECT_NO_THROW(resolve_params(t, {{"k", "1,-1,0"}}));
}

TEST(Catalog, CoerceParam) {
  const auto& e = find_entry("pid.main");
  EXPECT_EQ(coerce_param(e, "D", "5"), Json(5));
  EXPECT_THROW(coerce_param(e, "D", "5x"), UsageError);
}

TEST(Catalog, SingleCaseOverrides) {
  const auto r = run_entry(find_entry("hall.finite"), {{"k", 2}, {"j", 1}, {"n", 2}});
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.params["k"], 2);
}

TEST(Catalog, JsonReportShape) {
  const auto r = run_entry(find_entry("rr.classical"), {{"N", 20}});
  const auto j = r.to_json();
  for (const char* k : {"identity_id", "params", "status", "checked_bounds", "runtime_ms", "seed"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_EQ(j["status"], "pass");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("run nosuch"), 2);
  EXPECT_EQ(run_cli("run pid.main --vars 2,2 -D 4"), 0);
  EXPECT_EQ(run_cli("run rr.a2 -N 40 --format json"), 0);
  EXPECT_EQ(run_cli("run hl.sqspec --partition 1,2"), 2);
  EXPECT_EQ(run_cli("run pid.main --set nosuch=1"), 2);
  EXPECT_EQ(run_cli("run bl.type2 --set range=printed --set k=-1,0,1 --bound 2,2"), 1);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("list"), 0);
  EXPECT_EQ(run_cli("list --format json"), 0);
  EXPECT_EQ(run_cli("ansum --levels 2,1 -D 3"), 0);
  EXPECT_EQ(run_cli("ansum --levels 2,x"), 2);
}
