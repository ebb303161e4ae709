// weyl-lab: batch verification harness.
//
//   weyl-lab verify <suite> [--seed N] [--tol name=value ...]
//                   [--points FILE] [--out FILE] [--format json|csv-summary]
//
// Runs the named check suite deterministically under the seed and emits a
// machine-readable report. Exit code 0 when every check passes, 1 otherwise
// (including configuration and input errors).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "weyl/report.hpp"
#include "weyl/suites.hpp"

namespace {

int run_verify(const weyl::SuiteConfig& config) {
  const weyl::SuiteReport report = weyl::run_suite(config);
  for (const auto& c : report.checks) {
    std::fprintf(stderr, "[%s] %-30s extremal=%.6g tol=%.6g (%.1f ms)\n",
                 c.pass ? "PASS" : "FAIL", c.id.c_str(), c.extremal, c.tolerance,
                 c.runtime_ms);
  }
  std::fprintf(stderr, "overall: %s\n", report.overall() ? "pass" : "fail");
  if (config.out_path) {
    std::fprintf(stderr, "report written to %s\n", config.out_path->c_str());
  } else if (config.format == "json") {
    std::cout << weyl::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << weyl::report_to_csv_summary(report);
  }
  return report.overall() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional verification lab for twisted group algebras, "
               "generating-function states and measure transforms"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "weyl | states | gns | torus | measures | all")
      ->required();
  weyl::SuiteConfig config;
  verify->add_option("--seed", config.seed, "RNG seed for randomized checks");
  std::vector<std::string> tol_args;
  verify->add_option("--tol", tol_args, "tolerance override name=value")
      ->type_name("NAME=VALUE");
  std::string points, out, format = "json";
  verify->add_option("--points", points, "CSV point-set file for extra kernel checks");
  verify->add_option("--out", out, "output report path");
  verify->add_option("--format", format, "json | csv-summary")
      ->check(CLI::IsMember({"json", "csv-summary"}));

  CLI11_PARSE(app, argc, argv);

  try {
    config.suite = suite;
    config.format = format;
    if (!points.empty()) config.points_path = points;
    if (!out.empty()) config.out_path = out;
    for (const auto& entry : tol_args) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--tol expects name=value, got '" + entry + "'");
      config.tolerances[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    }
    return run_verify(config);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
