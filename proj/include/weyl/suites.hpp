#ifndef WEYL_SUITES_HPP
#define WEYL_SUITES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "weyl/report.hpp"

namespace weyl {

// Batch verification configuration. `tolerances` overrides the per-check
// defaults by check id; unknown names and non-positive values are rejected.
struct SuiteConfig {
  std::string suite = "all";  // weyl | states | gns | torus | measures | all
  std::uint64_t seed = 20260810;
  std::map<std::string, double> tolerances;
  std::optional<std::string> points_path;  // extra CSV point set, optional
  std::optional<std::string> out_path;
  std::string format = "json";
};

// Runs the named suite deterministically under the seed; writes the report
// to out_path when set. Throws std::invalid_argument on bad configuration or
// unparseable inputs.
SuiteReport run_suite(const SuiteConfig& config);

// Default tolerance per check id (exposed for the CLI's validation).
const std::map<std::string, double>& default_tolerances();

}  // namespace weyl

#endif  // WEYL_SUITES_HPP
