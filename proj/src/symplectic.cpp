#include "weyl/symplectic.hpp"

#include <stdexcept>

namespace weyl {

SymplecticSpace SymplecticSpace::standard_pairs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("SymplecticSpace: block dimension must be >= 1");
  SymplecticSpace s;
  s.kind = Kind::StandardPairs;
  s.n = n;
  return s;
}

SymplecticSpace SymplecticSpace::lattice_z2(double theta) {
  SymplecticSpace s;
  s.kind = Kind::LatticeZ2;
  s.n = 1;
  s.theta = theta;
  return s;
}

void SymplecticSpace::check_point(const PhasePoint& z) const {
  if (z.block_dim() != n)
    throw std::invalid_argument("SymplecticSpace: point has wrong dimension");
  if (kind == Kind::LatticeZ2) {
    if (denominator(z.first[0]) != 1 || denominator(z.second[0]) != 1)
      throw std::invalid_argument("SymplecticSpace: lattice points must be integers");
  }
}

Rational beta(const SymplecticSpace& space, const PhasePoint& y, const PhasePoint& z) {
  if (space.kind != SymplecticSpace::Kind::StandardPairs)
    throw std::invalid_argument("beta: defined on StandardPairs spaces");
  space.check_point(y);
  space.check_point(z);
  Rational acc(0);
  for (std::size_t i = 0; i < space.n; ++i)
    acc += y.first[i] * z.second[i] - y.second[i] * z.first[i];
  return acc / 2;
}

double twist_angle(const SymplecticSpace& space, const PhasePoint& y, const PhasePoint& z) {
  if (space.kind == SymplecticSpace::Kind::StandardPairs)
    return to_double(beta(space, y, z));
  space.check_point(y);
  space.check_point(z);
  const Rational cross = y.first[0] * z.second[0] - y.second[0] * z.first[0];
  return space.theta * to_double(cross);
}

ComplexRational complex_inner(const SymplecticSpace& space, const PhasePoint& y,
                              const PhasePoint& z) {
  return {beta(space, y, times_i(z)), beta(space, y, z)};
}

Rational standard_inner(const PhasePoint& y, const PhasePoint& z) {
  PhasePoint::check_same_dim(y, z);
  Rational acc(0);
  for (std::size_t i = 0; i < y.first.size(); ++i)
    acc += y.first[i] * z.first[i] + y.second[i] * z.second[i];
  return acc;
}

bool isotropy_check(const SymplecticSpace& space, const std::vector<PhasePoint>& generators) {
  if (generators.empty())
    throw std::invalid_argument("isotropy_check: empty generator list");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (beta(space, generators[i], generators[j]) != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form over the rationals, in place. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const Rational inv = m[r][c];
    for (auto& v : m[r]) v /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Rational> flatten(const PhasePoint& z) {
  std::vector<Rational> v;
  v.reserve(2 * z.block_dim());
  for (const auto& c : z.first) v.push_back(c);
  for (const auto& c : z.second) v.push_back(c);
  return v;
}

PhasePoint unflatten(const std::vector<Rational>& v) {
  const std::size_t n = v.size() / 2;
  return PhasePoint(std::vector<Rational>(v.begin(), v.begin() + n),
                    std::vector<Rational>(v.begin() + n, v.end()));
}

}  // namespace

std::vector<PhasePoint> beta_annihilator(const SymplecticSpace& space,
                                         const std::vector<PhasePoint>& generators) {
  if (space.kind != SymplecticSpace::Kind::StandardPairs)
    throw std::invalid_argument("beta_annihilator: defined on StandardPairs spaces");
  const std::size_t dim = 2 * space.n;

  // Row per generator g: the linear functional z -> beta(z, g). In flattened
  // coordinates (z1, z2) this is (g2, -g1)/2; the 1/2 does not change the
  // null space and is dropped.
  std::vector<std::vector<Rational>> m;
  for (const auto& g : generators) {
    space.check_point(g);
    std::vector<Rational> row(dim, Rational(0));
    for (std::size_t i = 0; i < space.n; ++i) {
      row[i] = g.second[i];
      row[space.n + i] = -g.first[i];
    }
    m.push_back(std::move(row));
  }

  const auto pivots = rref(m);

  // Null-space basis: one vector per free column.
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<PhasePoint> basis;
  for (std::size_t c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(dim, Rational(0));
    v[c] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m[p][c];
    basis.push_back(unflatten(v));
  }
  return basis;
}

std::size_t rational_span_dim(const std::vector<PhasePoint>& points) {
  if (points.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  m.reserve(points.size());
  for (const auto& p : points) m.push_back(flatten(p));
  return rref(m).size();
}

}  // namespace weyl
