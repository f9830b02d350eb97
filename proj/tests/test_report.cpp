#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ncprob/suites.hpp"

using namespace ncprob;

TEST_SUITE("report") {

TEST_CASE("record invariant and slack_tol echo") {
  auto r = VerificationReport::make("demo", 1.0, 1.5, 1e-9, {{"t", 2.0}}, {{"gap", 0.1}});
  CHECK(r.pass);
  CHECK(r.slack == doctest::Approx(0.5));
  CHECK(r.params.at("slack_tol") == doctest::Approx(1e-9));
  CHECK(r.params.at("t") == doctest::Approx(2.0));

  auto tight = VerificationReport::make("demo", 1.0, 1.0 - 5e-10, 1e-9);
  CHECK(tight.pass);  // inside the tolerance band
  auto fail = VerificationReport::make("demo", 1.0, 0.9, 1e-9);
  CHECK_FALSE(fail.pass);
}

TEST_CASE("worst_of keeps the smallest slack and ands the passes") {
  auto a = VerificationReport::make("a", 0.0, 1.0, 0.0);
  auto b = VerificationReport::make("b", 0.0, 0.25, 0.0);
  auto w = worst_of("folded", {a, b});
  CHECK(w.pass);
  CHECK(w.slack == doctest::Approx(0.25));
  CHECK(w.suite == "folded");

  auto bad = VerificationReport::make("c", 2.0, 1.0, 0.0);
  CHECK_FALSE(worst_of("folded", {a, bad, b}).pass);
  CHECK_FALSE(worst_of("folded", {}).pass);
}

TEST_CASE("t grid parsing") {
  TGridSpec g = TGridSpec::parse("0.5:4:8");
  CHECK(g.min == doctest::Approx(0.5));
  CHECK(g.max == doctest::Approx(4.0));
  CHECK(g.points == 8);
  CHECK_FALSE(g.log_scale);
  auto v = g.make();
  REQUIRE(v.size() == 8);
  CHECK(v.front() == doctest::Approx(0.5));
  CHECK(v.back() == doctest::Approx(4.0));

  TGridSpec lg = TGridSpec::parse("0.1:10:5:log");
  CHECK(lg.log_scale);
  auto lv = lg.make();
  CHECK(lv[2] == doctest::Approx(1.0));  // geometric midpoint

  CHECK(TGridSpec::parse("2:2:1").make() == std::vector<double>{2.0});

  CHECK_THROWS_AS(TGridSpec::parse("1:2"), ParamError);
  CHECK_THROWS_AS(TGridSpec::parse("a:b:3"), ParamError);
  CHECK_THROWS_AS(TGridSpec::parse("1:2:3:frob"), ParamError);
  CHECK_THROWS_AS(TGridSpec::parse("4:1:3"), ParamError);
  CHECK_THROWS_AS(TGridSpec::parse("0:1:3:log"), ParamError);
  CHECK_THROWS_AS(TGridSpec::parse("1:2:0"), ParamError);
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.suite = "axioms";
  CHECK_NOTHROW(cfg.validate());

  SuiteConfig bad = cfg;
  bad.suite = "frobnicate";
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.trials = 0;
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.jobs = 0;
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.jobs = 65;
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.format = "xml";
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.factor_dims = {4};
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.factor_dims = {1, 64, 65};
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.r = 2.5;
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.p = 0.5;
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = cfg;
  bad.m_bound = 0.0;
  CHECK_THROWS_AS(bad.validate(), ParamError);
}

TEST_CASE("json records parse back with full precision") {
  auto r = VerificationReport::make("demo", 1.0 / 3.0, 2.0 / 3.0, 1e-12, {{"n", 10.0}},
                                    {{"margin", 0.001}});
  std::string text = serialize_records({r}, "json");
  CHECK(text.back() == '\n');
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("type") == "record");
  CHECK(j.at("suite") == "demo");
  CHECK(j.at("lhs").get<double>() == 1.0 / 3.0);
  CHECK(j.at("rhs").get<double>() == 2.0 / 3.0);
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("params").at("n").get<double>() == 10.0);
  CHECK(j.at("witness").at("margin").get<double>() == 0.001);
}

TEST_CASE("csv layout and round-trip precision") {
  auto a = VerificationReport::make("s1", 1.0 / 3.0, 1.0, 0.0, {{"t", 1.0}});
  auto b = VerificationReport::make("s2", 0.0, 1.0, 0.0, {}, {{"gap", 2.0}});
  std::string text = serialize_records({a, b}, "csv");
  std::istringstream is(text);
  std::string header, row1, row2;
  std::getline(is, header);
  std::getline(is, row1);
  std::getline(is, row2);
  CHECK(header == "suite,pass,lhs,rhs,slack,param:slack_tol,param:t,witness:gap");
  CHECK(row1.find("0.33333333333333331") != std::string::npos);
  CHECK(row1.substr(0, 5) == "s1,1,");
  // b has no "t" param: empty cell between slack_tol and the witness column
  CHECK(row2.find(",,") != std::string::npos);

  CHECK_THROWS_AS(serialize_records({a}, "yaml"), ParamError);
}

TEST_CASE("suite output is independent of the job count") {
  SuiteConfig cfg;
  cfg.suite = "layercake";
  cfg.trials = 3;
  cfg.seed = 99;
  cfg.jobs = 1;
  auto one = run_suite(cfg);
  cfg.jobs = 4;
  auto four = run_suite(cfg);
  CHECK(one.records.size() == four.records.size());
  CHECK(serialize_records(one.records, "json") == serialize_records(four.records, "json"));
  CHECK(serialize_records(one.records, "csv") == serialize_records(four.records, "csv"));

  SuiteConfig ax;
  ax.suite = "axioms";
  ax.trials = 2;
  ax.factor_dims = {1, 2, 2};
  ax.jobs = 1;
  auto a1 = run_suite(ax);
  ax.jobs = 4;
  auto a4 = run_suite(ax);
  CHECK(serialize_records(a1.records, "json") == serialize_records(a4.records, "json"));
  CHECK(a1.summary.pass());
}

TEST_CASE("rerun with the same seed reproduces the bytes") {
  SuiteConfig cfg;
  cfg.suite = "layercake";
  cfg.trials = 2;
  cfg.seed = 7;
  auto first = run_suite(cfg);
  auto second = run_suite(cfg);
  CHECK(serialize_records(first.records, "json") == serialize_records(second.records, "json"));
  cfg.seed = 8;
  auto shifted = run_suite(cfg);
  CHECK(serialize_records(first.records, "json") != serialize_records(shifted.records, "json"));
}

TEST_CASE("exit code follows the summary") {
  SuiteResult res;
  res.summary.pass_count = 3;
  res.summary.total = 3;
  CHECK(exit_code(res) == 0);
  res.summary.pass_count = 2;
  CHECK(exit_code(res) == 1);
  res.summary.total = 0;
  CHECK(exit_code(res) == 1);
}

TEST_CASE("unknown suite is rejected up front") {
  SuiteConfig cfg;
  cfg.suite = "nonesuch";
  CHECK_THROWS_AS(run_suite(cfg), ParamError);
}

TEST_CASE("report stream shape") {
  SuiteConfig cfg;
  cfg.suite = "layercake";
  cfg.trials = 1;
  auto res = run_suite(cfg);

  std::ostringstream js;
  write_report(res, js);
  std::istringstream lines(js.str());
  std::string first, line, last;
  std::getline(lines, first);
  while (std::getline(lines, line)) last = line;
  CHECK(nlohmann::json::parse(first).at("type") == "header");
  auto tail = nlohmann::json::parse(last);
  CHECK(tail.at("type") == "summary");
  CHECK(tail.at("pass").get<bool>());
  CHECK(tail.at("total").get<int>() == static_cast<int>(res.records.size()));

  res.config.format = "csv";
  std::ostringstream cs;
  write_report(res, cs);
  CHECK(cs.str().rfind("# suite=layercake", 0) == 0);
  CHECK(cs.str().find("# summary ") != std::string::npos);
}

TEST_CASE("suite and axis registries") {
  const auto& names = suite_names();
  CHECK(names.size() == 9);
  CHECK(std::find(names.begin(), names.end(), "bennett") != names.end());
  const auto& axes = sweep_axes();
  CHECK(axes == std::vector<std::string>{"t", "n", "gamma", "r"});

  SuiteConfig cfg;
  cfg.suite = "bennett";
  cfg.t_grid = TGridSpec{1.0, 3.0, 4, false};
  auto sw = run_sweep("t", cfg);
  CHECK(sw.records.size() == 4);
  CHECK(sw.summary.pass());
  CHECK_THROWS_AS(run_sweep("q", cfg), ParamError);
}

}  // TEST_SUITE
