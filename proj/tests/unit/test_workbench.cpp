#include <gtest/gtest.h>

#include <cstdlib>

#include "commands.hpp"
#include "config.hpp"
#include "qweyl/errors.hpp"
#include "suite.hpp"

using namespace qweyl;
using namespace qweyl::workbench;
using nlohmann::json;

namespace {

std::string config_path(const std::string& name) {
  const char* dir = std::getenv("QWEYL_CONFIG_DIR");
  return std::string(dir ? dir : "tools/configs") + "/" + name;
}

json base() {
  return json::parse(R"({"field": "cyclotomic", "l": 3, "n": 1, "d": 1, "M": "single_parameter",
                         "normalization": "rescaled", "A": [[1]], "eta": ["8"]})");
}

std::vector<std::string> problems_of(const json& j) {
  try {
    parse_config(j);
  } catch (const ConfigError& e) {
    return e.problems();
  }
  return {};
}

bool mentions(const std::vector<std::string>& problems, const std::string& prefix) {
  for (const auto& p : problems)
    if (p.rfind(prefix, 0) == 0) return true;
  return false;
}

json strip_timing(json report) {
  for (auto& c : report["checks"]) c.erase("elapsed");
  return report;
}

}  // namespace

TEST(Config, BaseIsValid) {
  auto cfg = parse_config(base());
  EXPECT_EQ(cfg.l, 3);
  EXPECT_EQ(cfg.n, 1u);
  EXPECT_EQ(cfg.eta.size(), 1u);
}

TEST(Config, EvenOrderRejected) {
  auto j = base();
  j["l"] = 2;
  auto p = problems_of(j);
  ASSERT_TRUE(mentions(p, "l: "));
  EXPECT_NE(p[0].find("got 2"), std::string::npos);
}

TEST(Config, FieldPathsReported) {
  auto j = base();
  j["eta"] = json::array({"0"});
  EXPECT_TRUE(mentions(problems_of(j), "eta[0]"));
  j = base();
  j["A"] = json::array({json::array({1, 2})});
  EXPECT_TRUE(mentions(problems_of(j), "A"));
  j = base();
  j["colour"] = "blue";
  EXPECT_TRUE(mentions(problems_of(j), "colour"));
  j = base();
  j["reps"] = json::parse(R"([[{"kind": "diag", "lambda": "1", "b": ["1", "1"]}]])");
  EXPECT_TRUE(mentions(problems_of(j), "reps[0][0].b"));
  j = base();
  j["bounds"] = json::parse(R"({"degree_bound": 99})");
  EXPECT_TRUE(mentions(problems_of(j), "bounds.degree_bound"));
}

TEST(Config, RationalFieldNeedsZeroMatrix) {
  auto j = json::parse(R"({"field": "rational", "n": 2, "M": [[1, 0], [0, 1]], "normalization": "unscaled"})");
  EXPECT_TRUE(mentions(problems_of(j), "M"));
  j["M"] = json::parse("[[0, 0], [0, 0]]");
  EXPECT_TRUE(problems_of(j).empty());
}

TEST(Config, MultipleProblemsCollected) {
  auto j = base();
  j["l"] = 4;
  j["n"] = 0;
  EXPECT_GE(problems_of(j).size(), 2u);
}

TEST(Config, LoadsShippedFiles) {
  for (const char* name : {"n1_l3.json", "n2_l3.json", "generic_q.json", "classical.json", "zeroed_b.json"})
    EXPECT_NO_THROW(load_config(config_path(name))) << name;
  EXPECT_THROW(load_config(config_path("invalid_l2.json")), ConfigError);
  EXPECT_THROW(load_config(config_path("missing.json")), ConfigError);
}

TEST(Commands, Eval) {
  auto cfg = load_config(config_path("n1_l3.json"));
  EXPECT_EQ(eval_command("d1*x1", cfg), "zeta*x1*d1 + (zeta-1)");
  EXPECT_EQ(eval_command("x1^3*d1 - d1*x1^3", cfg), "0");
  EXPECT_THROW(eval_command("x2", cfg), ParseError);
}

TEST(Commands, Reduce) {
  auto cfg = load_config(config_path("n1_l3.json"));
  EXPECT_EQ(reduce_command("x1*d1", cfg), "7");
  EXPECT_EQ(reduce_command("a1", cfg), "8");
  EXPECT_EQ(reduce_command("x1^3*d1^3", cfg), reduce_command("(a1 - 1)*(a1 - zeta)*(a1 - zeta^2)/zeta^3", cfg));
}

TEST(Commands, RepBuild) {
  auto cfg = load_config(config_path("n1_l3.json"));
  auto out = rep_build_command(cfg);
  ASSERT_EQ(out["reps"].size(), 3u);
  EXPECT_EQ(out["reps"][0]["dim"], 3);
  EXPECT_EQ(out["reps"][0]["X"][0].size(), 3u);
}

TEST(Suite, PassesAndIsDeterministic) {
  auto cfg = load_config(config_path("n1_l3.json"));
  auto a = run_suite(cfg, {});
  auto b = run_suite(cfg, {});
  EXPECT_TRUE(suite_passed(a));
  EXPECT_EQ(strip_timing(make_report(cfg, a, true)), strip_timing(make_report(cfg, b, true)));
  auto report = make_report(cfg, a, false);
  EXPECT_EQ(report["tool"], kToolName);
  EXPECT_EQ(report["summary"]["failed"], 0);
  EXPECT_EQ(report["checks"].size(), check_ids(cfg).size());
}

TEST(Suite, ZeroedWeightRepFails) {
  auto cfg = load_config(config_path("zeroed_b.json"));
  auto results = run_suite(cfg, {{"root.rep"}, false});
  EXPECT_FALSE(suite_passed(results));
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].status, Status::Pass);
  EXPECT_EQ(results[1].status, Status::Fail);
  EXPECT_NE(results[1].detail.find("reducible"), std::string::npos);
}

TEST(Suite, OnlySelection) {
  auto cfg = load_config(config_path("n1_l3.json"));
  auto results = run_suite(cfg, {{"hopf.axioms"}, false});
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].check_id, "hopf.axioms");
  EXPECT_THROW(run_suite(cfg, {{"bogus"}, false}), ParameterError);
}
