#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "qalg/harness.hpp"
#include "qalg/io/json.hpp"

using namespace qalg;

namespace {

IdentityCheck fake(std::string id, std::function<IdentityReport(const PrecisionContext&)> run, int digits = 0) {
  IdentityCheck c;
  c.id = std::move(id);
  c.suites = {"series-exact"};
  c.digits = digits;
  c.run = std::move(run);
  return c;
}

IdentityReport ok_report(const PrecisionContext&) { return make_exact_report("", true, "a", "a"); }

}  // namespace

TEST(Registry, SelfTestPasses) {
  SelfTestResult r = registry_self_test();
  for (const auto& p : r.problems) ADD_FAILURE() << p;
  EXPECT_TRUE(r.ok);
  EXPECT_GT(registry().size(), 50u);
}

TEST(Registry, SelfTestCatchesProblems) {
  std::vector<IdentityCheck> checks = {fake("dup", ok_report), fake("dup", ok_report)};
  checks.push_back(fake("nosuite", ok_report));
  checks.back().suites.clear();
  checks.push_back(fake("norun", nullptr));
  SelfTestResult r = registry_self_test(checks);
  EXPECT_FALSE(r.ok);
  auto has = [&](const std::string& needle) {
    for (const auto& p : r.problems) {
      if (p.find(needle) != std::string::npos) return true;
    }
    return false;
  };
  EXPECT_TRUE(has("duplicate id dup"));
  EXPECT_TRUE(has("nosuite belongs to no suite"));
  EXPECT_TRUE(has("norun has no runner"));
  EXPECT_TRUE(has("is not exercised"));
}

TEST(Registry, SuitesAndIds) {
  std::set<std::string> ids;
  for (const auto& c : registry()) ids.insert(c.id);
  for (const char* id : {"eq03.modular5", "eq08.klein", "eq59.recognize"}) {
    bool found = false;
    for (const auto& s : ids) found = found || s.rfind(id, 0) == 0;
    EXPECT_TRUE(found) << id;
  }
  EXPECT_TRUE(is_suite("all"));
  EXPECT_FALSE(is_suite("everything"));
  EXPECT_EQ(default_suite_digits("conjectures"), 300);
  EXPECT_EQ(default_suite_digits("series-exact"), 50);
  EXPECT_EQ(criterion_triples().size(), 12u);
}

TEST(Runner, SeriesExactSuiteAllPass) {
  auto reports = run_suite("series-exact", 50, 4);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_EQ(r.verdict, Verdict::pass) << r.id << " " << r.note;
  SuiteSummary s = summarize(reports);
  EXPECT_EQ(s.fail, 0);
  EXPECT_EQ(s.pass, static_cast<int>(reports.size()));
}

TEST(Runner, RejectsBadSuiteAndLowDigits) {
  EXPECT_THROW(run_suite("nope", 120, 1), DomainError);
  EXPECT_THROW(run_suite("paper-core", 49, 1), DomainError);
}

TEST(Runner, ExceptionsBecomeFailures) {
  std::vector<IdentityCheck> checks = {
      fake("boom", [](const PrecisionContext&) -> IdentityReport { throw ConvergenceError("no luck"); })};
  auto reports = run_suite("series-exact", 60, 1, checks);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].verdict, Verdict::fail);
  EXPECT_EQ(reports[0].id, "boom");
  EXPECT_NE(reports[0].note.find("error: no luck"), std::string::npos);
}

TEST(Runner, MinimumDigitsNoted) {
  int seen = 0;
  std::vector<IdentityCheck> checks = {fake(
      "needs200",
      [&](const PrecisionContext& c) {
        seen = c.digits();
        return ok_report(c);
      },
      200)};
  auto reports = run_suite("series-exact", 60, 1, checks);
  EXPECT_EQ(seen, 200);
  EXPECT_NE(reports[0].note.find("run at 200 digits"), std::string::npos);
}

TEST(Runner, OrderingIndependentOfParallelism) {
  std::vector<IdentityCheck> checks;
  for (int i = 0; i < 20; ++i) {
    checks.push_back(fake("c" + std::to_string(i), [i](const PrecisionContext& c) {
      std::this_thread::sleep_for(std::chrono::milliseconds((20 - i) % 7));
      return make_report("", Real(i, c), Real(i, c), default_tolerance(c));
    }));
  }
  auto serial = run_suite("all", 60, 1, checks);
  auto parallel = run_suite("all", 60, 8, checks);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].id, "c" + std::to_string(i));
    EXPECT_EQ(parallel[i].id, serial[i].id);
    EXPECT_EQ(parallel[i].lhs, serial[i].lhs);
  }
}

TEST(Runner, DeterministicModuloWallTime) {
  auto a = run_suite("series-exact", 50, 3);
  auto b = run_suite("series-exact", 50, 1);
  for (auto* v : {&a, &b}) {
    for (auto& r : *v) r.wall_time_ms = 0;
  }
  EXPECT_EQ(io::report_document("series-exact", 50, a).dump(), io::report_document("series-exact", 50, b).dump());
}

TEST(Report, SummaryOfEmptyIsZero) {
  SuiteSummary s = summarize({});
  EXPECT_EQ(s.pass, 0);
  EXPECT_EQ(s.fail, 0);
  EXPECT_EQ(s.recorded, 0);
  auto doc = io::report_document("paper-core", 120, {});
  EXPECT_EQ(doc["summary"]["pass"], 0);
  EXPECT_TRUE(doc["checks"].empty());
}

TEST(Report, JsonRoundTrip) {
  PrecisionContext ctx(60);
  std::vector<IdentityReport> reps = {
      make_report("x.pass", Real(1L, ctx), Real(1L, ctx), default_tolerance(ctx)),
      make_report("x.rec", Real(1L, ctx), Real(2L, ctx), default_tolerance(ctx), CheckMode::recorded, "note"),
      make_exact_report("x.exact", false, "1", "2")};
  reps[1].wall_time_ms = 17;
  auto doc = io::parse_report_document(io::json::parse(io::emit_report("s", 60, reps, "json")));
  EXPECT_EQ(doc.suite, "s");
  EXPECT_EQ(doc.digits, 60);
  ASSERT_EQ(doc.checks.size(), 3u);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EXPECT_EQ(doc.checks[i].id, reps[i].id);
    EXPECT_EQ(doc.checks[i].lhs, reps[i].lhs);
    EXPECT_EQ(doc.checks[i].abs_difference, reps[i].abs_difference);
    EXPECT_EQ(doc.checks[i].verdict, reps[i].verdict);
    EXPECT_EQ(doc.checks[i].wall_time_ms, reps[i].wall_time_ms);
    EXPECT_EQ(doc.checks[i].note, reps[i].note);
  }
  EXPECT_EQ(reps[2].abs_difference, "nonzero");
  EXPECT_EQ(reps[2].tolerance, "0");
  EXPECT_THROW(io::emit_report("s", 60, reps, "xml"), DomainError);
  EXPECT_THROW(parse_verdict("maybe"), DomainError);
}

TEST(Report, TextTable) {
  auto reps = run_suite("series-exact", 50, 2);
  std::string text = emit_text("series-exact", 50, reps);
  EXPECT_NE(text.find("pass " + std::to_string(reps.size()) + ", fail 0, recorded 0"), std::string::npos);
}

TEST(TaylorJson, Parsing) {
  auto in = io::taylor_input_from_json(io::json::parse(R"({"coeffs": [1, "1/2", "-3/4"]})"));
  ASSERT_EQ(in.size(), 3u);
  EXPECT_EQ(in.c(2), Rational(1, 2));
  EXPECT_EQ(in.c(3), Rational(-3, 4));
  EXPECT_THROW(io::taylor_input_from_json(io::json::parse(R"({"coeffs": [0.5]})")), DomainError);
  EXPECT_THROW(io::taylor_input_from_json(io::json::parse(R"([1, 2])")), DomainError);
  EXPECT_THROW(io::read_taylor_input("/nonexistent/file.json"), DomainError);
  auto back = io::taylor_input_from_json(io::taylor_input_to_json(in));
  EXPECT_EQ(back.coeffs, in.coeffs);
}
