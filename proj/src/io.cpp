#include "weyl/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace weyl {

namespace {

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<PhasePoint> read_points_csv(std::istream& in) {
  std::vector<PhasePoint> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;

    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trimmed(field));

    const auto fail = [line_no](const std::string& why) {
      throw std::invalid_argument("points csv line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.empty()) fail("empty row");
    std::size_t n = 0;
    try {
      n = static_cast<std::size_t>(std::stoul(fields[0]));
    } catch (const std::exception&) {
      fail("block dimension is not a number");
    }
    if (n == 0) fail("block dimension must be >= 1");
    if (fields.size() != 1 + 2 * n) fail("expected 1 + 2n fields");

    std::vector<Rational> z1, z2;
    for (std::size_t i = 0; i < n; ++i) z1.push_back(parse_rational(fields[1 + i]));
    for (std::size_t i = 0; i < n; ++i) z2.push_back(parse_rational(fields[1 + n + i]));
    PhasePoint p(std::move(z1), std::move(z2));
    if (!points.empty() && points.front().block_dim() != p.block_dim())
      fail("rows declare different block dimensions");
    points.push_back(std::move(p));
  }
  if (points.empty())
    throw std::invalid_argument("points csv: no points found");
  return points;
}

std::vector<PhasePoint> read_points_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("points csv: cannot open '" + path + "'");
  return read_points_csv(in);
}

void write_points_csv(std::ostream& out, const std::vector<PhasePoint>& points) {
  for (const auto& p : points) {
    out << p.block_dim();
    for (const auto& c : p.first) out << "," << format_rational(c);
    for (const auto& c : p.second) out << "," << format_rational(c);
    out << "\n";
  }
}

}  // namespace weyl
