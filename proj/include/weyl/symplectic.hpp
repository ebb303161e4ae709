#ifndef WEYL_SYMPLECTIC_HPP
#define WEYL_SYMPLECTIC_HPP

#include <vector>

#include "weyl/phase_point.hpp"
#include "weyl/rational.hpp"

namespace weyl {

// Finite-dimensional symplectic phase space. Two kinds:
//   StandardPairs(n): S = R^n x R^n with beta(y,z) = ((y1|z2) - (y2|z1))/2.
//   LatticeZ2(theta):  G = Z^2 with the bicharacter phase theta*(m1 n2 - m2 n1).
struct SymplecticSpace {
  enum class Kind { StandardPairs, LatticeZ2 };

  Kind kind = Kind::StandardPairs;
  std::size_t n = 1;    // block dimension (StandardPairs); 1 for LatticeZ2
  double theta = 0.0;   // deformation angle in radians (LatticeZ2 only)

  static SymplecticSpace standard_pairs(std::size_t n);
  static SymplecticSpace lattice_z2(double theta);

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

  void check_point(const PhasePoint& z) const;
};

// beta(y,z) = ((y1|z2) - (y2|z1))/2, exact. StandardPairs only.
Rational beta(const SymplecticSpace& space, const PhasePoint& y, const PhasePoint& z);

// The angle entering the twisted product phase e^{i angle}. For StandardPairs
// this is beta as a double; for LatticeZ2 it is theta*(m1 n2 - m2 n1).
double twist_angle(const SymplecticSpace& space, const PhasePoint& y, const PhasePoint& z);

// Constructed inner product (y,z)_C = beta(y, iz) + i beta(y,z). Note this
// equals half the standard inner product; norm expressions elsewhere use the
// standard ||z1||^2 + ||z2||^2 (see PhasePoint::norm_sq).
ComplexRational complex_inner(const SymplecticSpace& space, const PhasePoint& y,
                              const PhasePoint& z);

// Standard inner product <y,z> = (y1|z1) + (y2|z2), exact. Kept alongside
// complex_inner since the two normalizations differ by a factor of 2.
Rational standard_inner(const PhasePoint& y, const PhasePoint& z);

// True iff beta vanishes on the span of the generators (checked pairwise,
// which suffices by bilinearity).
bool isotropy_check(const SymplecticSpace& space, const std::vector<PhasePoint>& generators);

// Exact rational basis of L^beta = { z : beta(z, g) = 0 for all generators g }.
std::vector<PhasePoint> beta_annihilator(const SymplecticSpace& space,
                                         const std::vector<PhasePoint>& generators);

// Dimension of the rational span of a point set (exact Gaussian elimination).
std::size_t rational_span_dim(const std::vector<PhasePoint>& points);

}  // namespace weyl

#endif  // WEYL_SYMPLECTIC_HPP
