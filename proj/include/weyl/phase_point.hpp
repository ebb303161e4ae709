#ifndef WEYL_PHASE_POINT_HPP
#define WEYL_PHASE_POINT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

// A point z = (z1, z2) of phase space with exact rational blocks. In the
// standard-pairs picture z1 is the position block and z2 the momentum block;
// in the L^2 picture they are the real and imaginary parts of the function.
struct PhasePoint {
  std::vector<Rational> first;   // z1 block
  std::vector<Rational> second;  // z2 block

  PhasePoint() = default;
  PhasePoint(std::vector<Rational> z1, std::vector<Rational> z2)
      : first(std::move(z1)), second(std::move(z2)) {
    if (first.size() != second.size() || first.empty())
      throw std::invalid_argument("PhasePoint: blocks must be nonempty and of equal length");
  }

  static PhasePoint zero(std::size_t n) {
    return PhasePoint(std::vector<Rational>(n, Rational(0)),
                      std::vector<Rational>(n, Rational(0)));
  }

  std::size_t block_dim() const { return first.size(); }

  bool is_zero() const {
    for (const auto& c : first)
      if (c != 0) return false;
    for (const auto& c : second)
      if (c != 0) return false;
    return true;
  }

  bool first_block_zero() const {
    for (const auto& c : first)
      if (c != 0) return false;
    return true;
  }

  // Standard squared norm ||z1||^2 + ||z2||^2, exact.
  Rational norm_sq() const {
    Rational s(0);
    for (const auto& c : first) s += c * c;
    for (const auto& c : second) s += c * c;
    return s;
  }

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;

  // Lexicographic order so points can key ordered maps.
  friend bool operator<(const PhasePoint& a, const PhasePoint& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    for (std::size_t i = 0; i < a.first.size(); ++i) {
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    }
    for (std::size_t i = 0; i < a.second.size(); ++i) {
      if (a.second[i] != b.second[i]) return a.second[i] < b.second[i];
    }
    return false;
  }

  friend PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
    check_same_dim(a, b);
    PhasePoint r = a;
    for (std::size_t i = 0; i < r.first.size(); ++i) {
      r.first[i] += b.first[i];
      r.second[i] += b.second[i];
    }
    return r;
  }

  friend PhasePoint operator-(const PhasePoint& a, const PhasePoint& b) {
    check_same_dim(a, b);
    PhasePoint r = a;
    for (std::size_t i = 0; i < r.first.size(); ++i) {
      r.first[i] -= b.first[i];
      r.second[i] -= b.second[i];
    }
    return r;
  }

  friend PhasePoint operator-(const PhasePoint& a) {
    PhasePoint r = a;
    for (auto& c : r.first) c = -c;
    for (auto& c : r.second) c = -c;
    return r;
  }

  friend PhasePoint operator*(const Rational& s, const PhasePoint& z) {
    PhasePoint r = z;
    for (auto& c : r.first) c *= s;
    for (auto& c : r.second) c *= s;
    return r;
  }

  static void check_same_dim(const PhasePoint& a, const PhasePoint& b) {
    if (a.block_dim() != b.block_dim())
      throw std::invalid_argument("PhasePoint: dimension mismatch");
  }
};

// Multiplication by a complex-rational scalar r + is via the complex
// structure (r + is).(z1, z2) = (r z1 - s z2, s z1 + r z2).
inline PhasePoint complex_scale(const ComplexRational& s, const PhasePoint& z) {
  PhasePoint r = z;
  for (std::size_t i = 0; i < z.first.size(); ++i) {
    r.first[i] = s.re * z.first[i] - s.im * z.second[i];
    r.second[i] = s.im * z.first[i] + s.re * z.second[i];
  }
  return r;
}

// i.z = (-z2, z1), the complex structure itself.
inline PhasePoint times_i(const PhasePoint& z) {
  return complex_scale(ComplexRational{Rational(0), Rational(1)}, z);
}

}  // namespace weyl

#endif  // WEYL_PHASE_POINT_HPP
