#include "weyl/state_checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace weyl {

Eigen::MatrixXcd kernel_matrix(const GeneratingFunction& g,
                               const std::vector<PhasePoint>& points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double angle = -to_double(beta(g.space(), points[j], points[k]));
      m(j, k) = g(points[j] - points[k]) * std::polar(1.0, angle);
    }
  }
  return m;
}

PositivityReport positivity_check(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("positivity_check: matrix not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("positivity_check: matrix not Hermitian to 1e-10");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  PositivityReport r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.tolerance = tol;
  r.psd = r.min_eigenvalue >= -tol;
  return r;
}

PositivityReport kernel_positivity(const GeneratingFunction& g,
                                   const std::vector<PhasePoint>& points, double tol) {
  PositivityReport r = positivity_check(kernel_matrix(g, points), tol);
  r.points = points;
  return r;
}

namespace {

// Enumerates integer combinations sum_i k_i g_i with |k_i| <= radius and
// applies fn to each. Combination counts grow as (2r+1)^#generators; callers
// keep the generator list short.
template <typename Fn>
void for_each_lattice_combination(const std::vector<PhasePoint>& generators, long radius,
                                  Fn&& fn) {
  std::vector<long> k(generators.size(), -radius);
  for (;;) {
    PhasePoint y = PhasePoint::zero(generators[0].block_dim());
    for (std::size_t i = 0; i < generators.size(); ++i)
      y = y + Rational(k[i]) * generators[i];
    fn(y);
    std::size_t i = 0;
    while (i < k.size() && k[i] == radius) k[i++] = -radius;
    if (i == k.size()) break;
    ++k[i];
  }
}

}  // namespace

bool dirac_check(const GeneratingFunction& g, const std::vector<PhasePoint>& generators,
                 long radius, double tol) {
  if (!isotropy_check(g.space(), generators))
    throw std::invalid_argument("dirac_check: generators are not beta-isotropic");
  bool ok = true;
  for_each_lattice_combination(generators, radius, [&](const PhasePoint& y) {
    if (std::abs(g(y) - cplx(1.0, 0.0)) > tol) ok = false;
  });
  return ok;
}

double dirac_invariance_check(const GeneratingFunction& g, const WeylElement& a,
                              const PhasePoint& y) {
  const WeylElement wy = WeylElement::generator(g.space(), y);
  const cplx base = evaluate_state(g, a);
  const cplx right = evaluate_state(g, weyl_mul(a, wy));
  const cplx left = evaluate_state(g, weyl_mul(wy, a));
  return std::max(std::abs(right - base), std::abs(left - base));
}

RegularityProbe regularity_probe(const GeneratingFunction& g, const PhasePoint& z,
                                 const std::vector<Rational>& t_grid) {
  bool has_zero = false, has_nonzero = false;
  RegularityProbe probe;
  bool jump = true;
  for (const auto& t : t_grid) {
    const cplx v = g(t * z);
    probe.samples.emplace_back(t, v);
    if (t == 0) {
      has_zero = true;
    } else {
      has_nonzero = true;
      if (std::abs(v - cplx(1.0, 0.0)) < 0.5) jump = false;
    }
  }
  if (!has_zero || !has_nonzero)
    throw std::invalid_argument("regularity_probe: grid must contain 0 and nonzero values");
  probe.classification = jump ? RegularityClass::JumpAt0 : RegularityClass::ContinuousAt0;
  return probe;
}

double phase_identity_check(const GeneratingFunction& g, const PhasePoint& y0,
                            const PhasePoint& z0, const std::vector<Rational>& t_grid) {
  const Rational b = beta(g.space(), y0, z0);
  if (b == 0)
    throw std::invalid_argument("phase_identity_check: beta(y0, z0) = 0 makes the argument vacuous");
  if (!dirac_check(g, {y0}, 3))
    throw std::invalid_argument("phase_identity_check: g is not Dirac along y0");
  const cplx gz0 = g(z0);
  const double bd = to_double(b);
  double dev = 0.0;
  for (const auto& t : t_grid) {
    const cplx v = g(z0 + t * y0);
    const double a = to_double(t) * bd;
    dev = std::max(dev, std::abs(std::polar(1.0, -a) * v - gz0));
    dev = std::max(dev, std::abs(std::polar(1.0, a) * v - gz0));
  }
  return dev;
}

std::vector<QuasifreeRow> quasifree_convergence(const SymplecticSpace& space,
                                                const PhasePoint& psi,
                                                const std::vector<double>& l_values) {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
  const cplx limit = g0(psi);
  std::vector<QuasifreeRow> rows;
  for (double l : l_values) {
    const cplx v = GeneratingFunction::quasifree(space, l)(psi);
    rows.push_back({l, v, std::abs(v - limit)});
  }
  return rows;
}

namespace {

// sup over eps in (0,1] of exp(-c eps^{-n}) / eps^m, in closed form. The
// ratio is maximized at eps = (c n / m)^{1/n} when that lies inside (0,1],
// otherwise at the endpoint eps = 1.
double tight_order_constant(double c, unsigned n, unsigned m) {
  const double cn = c * static_cast<double>(n);
  const double md = static_cast<double>(m);
  if (cn >= md) return std::exp(-c);
  const double t = md / static_cast<double>(n);
  return std::exp(-t + t * std::log(md / cn));
}

}  // namespace

ColombeauReport colombeau_scaling_test(double gauss_coeff, double mollifier_norm_sq,
                                       unsigned n, const std::vector<double>& eps_grid,
                                       unsigned m_max) {
  if (eps_grid.empty()) throw std::invalid_argument("colombeau_scaling_test: empty grid");
  if (m_max < 1) throw std::invalid_argument("colombeau_scaling_test: m_max must be >= 1");
  for (double e : eps_grid)
    if (!(e > 0.0 && e <= 1.0))
      throw std::invalid_argument("colombeau_scaling_test: eps values must lie in (0, 1]");

  std::vector<double> eps = eps_grid;
  std::sort(eps.begin(), eps.end(), std::greater<>());

  const double c = gauss_coeff * mollifier_norm_sq;
  ColombeauReport rep;
  for (double e : eps) rep.values.push_back(std::exp(-c * std::pow(e, -static_cast<double>(n))));

  bool ok = c > 0.0;
  for (unsigned m = 1; m <= m_max; ++m) {
    const double cm = tight_order_constant(c, n, m);
    rep.constants.push_back(cm);
    for (std::size_t i = 0; i < eps.size(); ++i) {
      // Slack for the float evaluation of the closed-form supremum.
      if (rep.values[i] > cm * std::pow(eps[i], static_cast<double>(m)) * (1.0 + 1e-12))
        ok = false;
    }
  }

  // Log-log slopes between consecutive grid points; for a genuinely
  // negligible family the tail slope must exceed every tested order. The
  // logarithm of the value is taken in closed form (-c eps^{-n}), since the
  // value itself underflows long before the decay order saturates.
  const auto log_value = [c, n](double e) { return -c * std::pow(e, -static_cast<double>(n)); };
  for (std::size_t i = 0; i + 1 < eps.size(); ++i) {
    const double slope =
        (log_value(eps[i + 1]) - log_value(eps[i])) / (std::log(eps[i + 1]) - std::log(eps[i]));
    rep.fitted_orders.push_back(slope);
  }
  rep.min_fitted_order_tail =
      rep.fitted_orders.empty() ? 0.0 : rep.fitted_orders.back();
  if (!rep.fitted_orders.empty() && rep.min_fitted_order_tail < static_cast<double>(m_max))
    ok = false;

  rep.negligible = ok;
  return rep;
}

ColombeauReport colombeau_scaling_test(const GeneratingFunction& g,
                                       double mollifier_norm_sq, unsigned n,
                                       const std::vector<double>& eps_grid, unsigned m_max) {
  if (g.variant() != GeneratingFunction::Variant::Quasifree &&
      g.variant() != GeneratingFunction::Variant::Fock)
    throw std::invalid_argument(
        "colombeau_scaling_test: closed-form exponent known only for quasifree-type g");
  const double l = g.length_scale();
  return colombeau_scaling_test(l * l / 4.0, mollifier_norm_sq, n, eps_grid, m_max);
}

}  // namespace weyl
