#ifndef WEYL_REPORT_HPP
#define WEYL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace weyl {

// One verification record. `anchor` is a stable label of the identity being
// checked, so reports stay traceable without free-form prose; `extremal` is
// the worst observed value of whatever the check bounds (deviation,
// eigenvalue floor, sigma distance, ...).
struct CheckRecord {
  std::string id;
  std::string anchor;
  bool pass = false;
  double extremal = 0.0;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Versioned JSON schema with stable field order; runtime_ms is the only
// run-dependent field.
nlohmann::ordered_json report_to_json(const SuiteReport& report);

// One row per check: suite,check,anchor,verdict,extremal,tolerance,runtime_ms.
std::string report_to_csv_summary(const SuiteReport& report);

void write_report_file(const SuiteReport& report, const std::string& path,
                       const std::string& format);

}  // namespace weyl

#endif  // WEYL_REPORT_HPP
