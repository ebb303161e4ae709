#include "weyl/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace weyl {

nlohmann::ordered_json report_to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["overall"] = report.overall() ? "pass" : "fail";
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json r;
    r["id"] = c.id;
    r["anchor"] = c.anchor;
    r["verdict"] = c.pass ? "pass" : "fail";
    r["extremal"] = c.extremal;
    r["tolerance"] = c.tolerance;
    r["runtime_ms"] = c.runtime_ms;
    if (!c.note.empty()) r["note"] = c.note;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string report_to_csv_summary(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite,check,anchor,verdict,extremal,tolerance,runtime_ms\n";
  out.precision(17);
  for (const auto& c : report.checks) {
    out << report.suite << ',' << c.id << ',' << c.anchor << ','
        << (c.pass ? "pass" : "fail") << ',' << c.extremal << ',' << c.tolerance << ','
        << c.runtime_ms << '\n';
  }
  return out.str();
}

void write_report_file(const SuiteReport& report, const std::string& path,
                       const std::string& format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  if (format == "json")
    out << report_to_json(report).dump(2) << "\n";
  else if (format == "csv-summary")
    out << report_to_csv_summary(report);
  else
    throw std::invalid_argument("unknown report format '" + format + "'");
}

}  // namespace weyl
