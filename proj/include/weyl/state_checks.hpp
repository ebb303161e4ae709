#ifndef WEYL_STATE_CHECKS_HPP
#define WEYL_STATE_CHECKS_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "weyl/generating_function.hpp"

namespace weyl {

// Kernel of the state-positivity criterion: M_jk = g(x_j - x_k) e^{-i beta(x_j, x_k)}.
// Hermitian whenever g(-z) = conj g(z).
Eigen::MatrixXcd kernel_matrix(const GeneratingFunction& g,
                               const std::vector<PhasePoint>& points);

struct PositivityReport {
  std::vector<PhasePoint> points;  // empty when checked from a raw matrix
  double min_eigenvalue = 0.0;
  bool psd = false;                // min_eigenvalue >= -tol
  double tolerance = 1e-9;
};

// Symmetric eigen-solve; rejects matrices that are not Hermitian to 1e-10.
PositivityReport positivity_check(const Eigen::MatrixXcd& m, double tol = 1e-9);

// Convenience: kernel matrix on the points, then positivity_check.
PositivityReport kernel_positivity(const GeneratingFunction& g,
                                   const std::vector<PhasePoint>& points,
                                   double tol = 1e-9);

// g(y) = 1 to `tol` on all integer combinations of the generators with
// coefficients in [-radius, radius]. The generators must be beta-isotropic.
bool dirac_check(const GeneratingFunction& g, const std::vector<PhasePoint>& generators,
                 long radius, double tol = 1e-12);

// max(|omega(A W(y)) - omega(A)|, |omega(W(y) A) - omega(A)|).
double dirac_invariance_check(const GeneratingFunction& g, const WeylElement& a,
                              const PhasePoint& y);

enum class RegularityClass { ContinuousAt0, JumpAt0 };

struct RegularityProbe {
  RegularityClass classification;
  std::vector<std::pair<Rational, cplx>> samples;  // (t, g(t z))
};

// Samples g(t z) on the grid. Classified JumpAt0 when |g(t z) - 1| stays
// >= 1/2 at every nonzero t; this is a classifier over the given grid, not
// a proof of (dis)continuity. The grid must contain 0 and a nonzero t.
RegularityProbe regularity_probe(const GeneratingFunction& g, const PhasePoint& z,
                                 const std::vector<Rational>& t_grid);

// Max over the grid of |e^{-+ i t beta(y0,z0)} g(z0 + t y0) - g(z0)| over both
// signs. For a Dirac g both vanish, which forces g(z0) = 0 off the
// beta-annihilator. Requires beta(y0, z0) != 0 and g Dirac along y0.
double phase_identity_check(const GeneratingFunction& g, const PhasePoint& y0,
                            const PhasePoint& z0, const std::vector<Rational>& t_grid);

struct QuasifreeRow {
  double l;
  cplx g_l;
  double deviation;  // |g_l(psi) - g0(psi)|
};

// Convergence table of the quasifree family toward the constraint state g0.
std::vector<QuasifreeRow> quasifree_convergence(const SymplecticSpace& space,
                                                const PhasePoint& psi,
                                                const std::vector<double>& l_values);

struct ColombeauReport {
  bool negligible = false;
  std::vector<double> values;           // value(eps) per grid point
  std::vector<double> constants;        // C_m, m = 1..m_max
  std::vector<double> fitted_orders;    // log-log slope between consecutive eps
  double min_fitted_order_tail = 0.0;   // slope between the two smallest eps
};

// Scaling test for Gaussian-type functionals: value(eps) = exp(-coeff *
// eps^{-n} * norm_sq). Verifies value(eps) <= C_m eps^m for every m <= m_max
// with the closed-form constants C_m = sup_{0 < eps <= 1} value/eps^m, and
// that the fitted decay order at the small end of the grid exceeds m_max.
ColombeauReport colombeau_scaling_test(double gauss_coeff, double mollifier_norm_sq,
                                       unsigned n, const std::vector<double>& eps_grid,
                                       unsigned m_max);

// Overload extracting the exponent coefficient l^2/4 from a quasifree g.
ColombeauReport colombeau_scaling_test(const GeneratingFunction& g,
                                       double mollifier_norm_sq, unsigned n,
                                       const std::vector<double>& eps_grid, unsigned m_max);

}  // namespace weyl

#endif  // WEYL_STATE_CHECKS_HPP
