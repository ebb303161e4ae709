#ifndef WEYL_IO_HPP
#define WEYL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "weyl/phase_point.hpp"

namespace weyl {

// CSV point sets: one point per row as "n, p1/q1, ..., p2n/q2n"; every row
// must declare the same block dimension. Blank lines and lines starting with
// '#' are skipped.
std::vector<PhasePoint> read_points_csv(std::istream& in);
std::vector<PhasePoint> read_points_csv_file(const std::string& path);
void write_points_csv(std::ostream& out, const std::vector<PhasePoint>& points);

}  // namespace weyl

#endif  // WEYL_IO_HPP
