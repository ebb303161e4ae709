#ifndef WEYL_GRID_REP_HPP
#define WEYL_GRID_REP_HPP

#include <iosfwd>
#include <vector>

#include "weyl/generating_function.hpp"

#include "json.hpp"

namespace weyl {

using GridVector = std::vector<cplx>;

// Uniformly discretized one-dimensional position space [-X, X) with N = 2^k
// samples, carrying the displacement operators
//   (W(z1, z2) psi)(x) = e^{-i z1 z2 / 2} e^{i z1 x} psi(x - z2),
// i.e. W(z) = exp(i(z1 X - z2 P)), which reproduces the twisted product
// W(y) W(z) = e^{i beta(y,z)} W(y+z) under operator composition. Fractional
// translations are spectral (FFT) with periodic wrap; vectors are expected
// to be negligible near the boundary.
class GridRep {
 public:
  GridRep(std::size_t n_points, double half_width);

  std::size_t size() const { return n_; }
  double half_width() const { return x_; }
  double spacing() const { return dx_; }
  double x(std::size_t j) const { return -x_ + dx_ * static_cast<double>(j); }

  // Weighted inner product approximating the continuum one.
  cplx inner(const GridVector& a, const GridVector& b) const;
  double norm(const GridVector& a) const;

  // Unit-norm Gaussian ground vector ~ pi^{-1/4} e^{-x^2/2}.
  GridVector gaussian_vector() const;

 private:
  std::size_t n_;
  double x_;
  double dx_;

  friend GridVector grid_weyl_apply(const GridRep&, const PhasePoint&, const GridVector&);
};

// Applies W(z) for z = ((z1),(z2)) on a block-dimension-1 pair space. The
// translation component must satisfy |z2| <= X/2 to keep the shifted support
// inside the window.
GridVector grid_weyl_apply(const GridRep& rep, const PhasePoint& z, const GridVector& psi);

// f_xi(z) = <xi, W(z) xi> for each z in the list; requires ||xi|| = 1 on the
// grid (to 1e-8). |f_xi| <= 1 up to quadrature error.
std::vector<cplx> vector_function(const GridRep& rep, const GridVector& xi,
                                  const std::vector<PhasePoint>& z_list);

struct DecayRow {
  double radius;
  double max_abs;  // max |h(z)| over the sampled circle ||z|| = radius
};

// h(z) = sum_k p_k f_{xi_k}(z) for a finite mixture; reports the maximum
// modulus on circles of the given radii (n_angles samples each).
std::vector<DecayRow> c0_decay_scan(const GridRep& rep,
                                    const std::vector<std::pair<double, GridVector>>& mixture,
                                    const std::vector<double>& radius_grid,
                                    std::size_t n_angles = 64);

// Decay tables export as "radius,max_abs" rows or as a JSON array.
void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows);
nlohmann::ordered_json decay_to_json(const std::vector<DecayRow>& rows);

}  // namespace weyl

#endif  // WEYL_GRID_REP_HPP
