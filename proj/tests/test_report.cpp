#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "confspec/report.hpp"

using namespace confspec;

namespace {

ExperimentReport sample() {
  ExperimentReport r;
  r.id = "demo/sphere";
  r.mesh = {"sphere", "r=1", 3, 642, 1280, 3};
  r.set("A", 12.5);
  r.set("lambda1", 2.0);
  r.set("multiplicity", 3);
  r.set("drift", 0.01);
  r.require("small_drift", "drift", Relation::LessEqual, 0.02);
  r.require("big_lambda", "lambda1", Relation::GreaterEqual, 1.5);
  r.tolerances["drift"] = 0.02;
  r.series.push_back({"drift", {3, 4, 5}, {0.04, 0.02, 0.01}});
  return r;
}

}  // namespace

TEST_CASE("margins and verdicts") {
  auto r = sample();
  CHECK(r.finalize() == Verdict::Pass);
  auto m = r.margins();
  CHECK(m.at("small_drift") == doctest::Approx(0.01));
  CHECK(m.at("big_lambda") == doctest::Approx(0.5));
  CHECK(*r.min_margin() == doctest::Approx(0.01));

  r.set("drift", 0.03);
  CHECK(recompute_verdict(r) == Verdict::Fail);
  r.set("drift", 0.02);  // boundary is inclusive
  CHECK(recompute_verdict(r) == Verdict::Pass);
  r.set("drift", NAN);
  CHECK(recompute_verdict(r) == Verdict::Fail);

  r.applicable = false;
  CHECK(r.finalize() == Verdict::NotApplicable);
}

TEST_CASE("a check on a missing quantity fails") {
  auto r = sample();
  r.require("ghost", "nothing", Relation::LessEqual, 1.0);
  CHECK(r.finalize() == Verdict::Fail);
  CHECK(std::isinf(r.margins().at("ghost")));
}

TEST_CASE("no checks means pass, no margin") {
  ExperimentReport r;
  CHECK(r.finalize() == Verdict::Pass);
  CHECK_FALSE(r.min_margin().has_value());
}

TEST_CASE("refinement series") {
  RefinementSeries s{"x", {1, 2, 4}, {8, 4, 1}};
  CHECK(s.is_valid());
  auto q = s.ratios();
  REQUIRE(q.size() == 2);
  CHECK(q[0] == 2.0);
  CHECK(q[1] == 4.0);
  CHECK_FALSE(RefinementSeries{"x", {2, 1}, {1, 1}}.is_valid());
  CHECK_FALSE(RefinementSeries{"x", {1, 2}, {1}}.is_valid());
}

TEST_CASE("json round trip carries everything needed to re-check") {
  auto r = sample();
  r.set("weird", INFINITY);
  r.finalize();
  auto j = nlohmann::json::parse(to_json({r}));
  const auto& e = j.at("reports").at(0);
  CHECK(e.at("id") == "demo/sphere");
  CHECK(e.at("mesh").at("vertices") == 642);
  CHECK(e.at("quantities").at("weird") == "inf");
  CHECK(e.at("verdict") == "pass");
  CHECK(e.at("series").at(0).at("ratios").size() == 2);
  // recompute every margin from the serialized numbers
  for (const auto& c : e.at("checks")) {
    const double v = e.at("quantities").at(c.at("quantity").get<std::string>()).get<double>();
    const double b = c.at("bound").get<double>();
    const double margin = c.at("relation") == "<=" ? b - v : v - b;
    CHECK(margin == doctest::Approx(e.at("margins").at(c.at("name").get<std::string>()).get<double>()));
  }
}

TEST_CASE("csv") {
  auto r = sample();
  r.finalize();
  std::ostringstream out;
  write_csv(out, {r});
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "experiment,mesh,n,A,lambda1,mult,TMC,lambda1A,margin,verdict");
  CHECK(row == "demo/sphere,sphere,642,12.5,2,3,,,0.01,pass");
}

TEST_CASE("text") {
  auto r = sample();
  r.finalize();
  std::ostringstream out;
  write_text(out, r);
  CHECK(out.str().find("[pass] demo/sphere") == 0);
  CHECK(out.str().find("small_drift") != std::string::npos);
}
