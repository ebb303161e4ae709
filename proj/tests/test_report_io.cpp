#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "weyl/report.hpp"
#include "weyl/suites.hpp"

using namespace weyl;

TEST_CASE("report serialization") {
  SuiteReport report;
  report.suite = "demo";
  report.seed = 42;
  report.checks.push_back({"demo.alpha", "alpha identity", true, 1e-15, 1e-12, 3.5, ""});
  report.checks.push_back({"demo.beta", "beta bound", false, 2.0, 1e-9, 1.0, "note"});

  const auto j = report_to_json(report);
  CHECK(j["schema_version"] == 1);
  CHECK(j["suite"] == "demo");
  CHECK(j["seed"] == 42);
  CHECK(j["overall"] == "fail");
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["id"] == "demo.alpha");
  CHECK(j["checks"][0]["verdict"] == "pass");
  CHECK(j["checks"][1]["note"] == "note");
  CHECK(j.dump() == report_to_json(report).dump());  // stable field order

  const std::string csv = report_to_csv_summary(report);
  std::istringstream lines(csv);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);  // header + one row per check
}

TEST_CASE("suite runs are deterministic under a fixed seed") {
  SuiteConfig config;
  config.suite = "torus";
  config.seed = 123;
  const SuiteReport a = run_suite(config);
  const SuiteReport b = run_suite(config);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].extremal == b.checks[i].extremal);  // bitwise equal
  }
  CHECK(a.overall());

  // Byte-identical JSON once the run-dependent runtime field is stripped.
  auto ja = report_to_json(a);
  auto jb = report_to_json(b);
  for (auto& c : ja["checks"]) c.erase("runtime_ms");
  for (auto& c : jb["checks"]) c.erase("runtime_ms");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("suite configuration validation") {
  SuiteConfig config;
  config.suite = "nonsense";
  CHECK_THROWS_AS(run_suite(config), std::invalid_argument);

  config.suite = "torus";
  config.tolerances["no.such.check"] = 1e-9;
  CHECK_THROWS_AS(run_suite(config), std::invalid_argument);

  config.tolerances.clear();
  config.tolerances["torus.relation"] = -1.0;
  CHECK_THROWS_AS(run_suite(config), std::invalid_argument);
}

TEST_CASE("tolerance overrides bite") {
  SuiteConfig config;
  config.suite = "torus";
  config.tolerances["torus.relation"] = 1e-300;  // below any float deviation
  const SuiteReport report = run_suite(config);
  bool found = false;
  for (const auto& c : report.checks)
    if (c.id == "torus.relation") {
      found = true;
      CHECK_FALSE(c.pass);
    }
  CHECK(found);
  CHECK_FALSE(report.overall());
}

TEST_CASE("suite report files round trip") {
  SuiteConfig config;
  config.suite = "torus";
  const std::string path = "torus_report_test.json";
  config.out_path = path;
  const SuiteReport report = run_suite(config);
  CHECK(report.overall());

  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json parsed;
  in >> parsed;
  CHECK(parsed["suite"] == "torus");
  CHECK(parsed["overall"] == "pass");
  CHECK(parsed["checks"].size() == report.checks.size());
  std::remove(path.c_str());
}

TEST_CASE("missing points file is rejected") {
  SuiteConfig config;
  config.suite = "states";
  config.points_path = "definitely_not_here.csv";
  CHECK_THROWS_AS(run_suite(config), std::invalid_argument);
}
