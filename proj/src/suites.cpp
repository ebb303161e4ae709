#include "weyl/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weyl/gns.hpp"
#include "weyl/grid_rep.hpp"
#include "weyl/io.hpp"
#include "weyl/measures.hpp"
#include "weyl/rng.hpp"
#include "weyl/state_checks.hpp"
#include "weyl/torus.hpp"

namespace weyl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

cplx random_coeff(SubstreamRng& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

WeylElement random_element(SubstreamRng& rng, const SymplecticSpace& space,
                           std::size_t terms) {
  WeylElement a(space);
  for (std::size_t t = 0; t < terms; ++t)
    a.add_term(rng.phase_point(space.n), random_coeff(rng));
  return a;
}

bool support_equal(const WeylElement& a, const WeylElement& b) {
  if (a.support_size() != b.support_size()) return false;
  auto it = b.terms().begin();
  for (const auto& [z, c] : a.terms()) {
    if (!(it->first == z)) return false;
    ++it;
  }
  return true;
}

double max_coeff_deviation(const WeylElement& a, const WeylElement& b) {
  double dev = 0.0;
  for (const auto& [z, c] : a.terms()) dev = std::max(dev, std::abs(c - b.coefficient(z)));
  for (const auto& [z, c] : b.terms()) dev = std::max(dev, std::abs(c - a.coefficient(z)));
  return dev;
}

struct CheckContext {
  std::uint64_t seed;
  const std::map<std::string, double>& tol;
  const std::vector<PhasePoint>* extra_points;  // optional CSV point set
};

using CheckFn = std::function<CheckRecord(const CheckContext&)>;

CheckRecord make_record(const std::string& id, const std::string& anchor, double tolerance,
                        Clock::time_point t0, bool pass, double extremal,
                        std::string note = {}) {
  return {id, anchor, pass, extremal, tolerance, ms_since(t0), std::move(note)};
}

// ---------------------------------------------------------------------------
// weyl suite
// ---------------------------------------------------------------------------

CheckRecord check_weyl_unitarity(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("weyl.unitarity");
  SubstreamRng rng(ctx.seed, 101);
  bool support_ok = true;
  double dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto space = SymplecticSpace::standard_pairs(1 + i % 4);
    const PhasePoint y = rng.phase_point(space.n);
    const WeylElement wy = WeylElement::generator(space, y);
    const WeylElement prod = weyl_mul(adjoint(wy), wy);
    if (!support_equal(prod, WeylElement::unit(space))) support_ok = false;
    dev = std::max(dev, max_coeff_deviation(prod, WeylElement::unit(space)));
  }
  return make_record("weyl.unitarity", "W(-z)W(z) = W(0)", tol, t0,
                     support_ok && dev <= tol, dev,
                     support_ok ? "triples=200,n<=4" : "support mismatch");
}

CheckRecord check_weyl_involution(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("weyl.involution");
  SubstreamRng rng(ctx.seed, 102);
  bool support_ok = true;
  double dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto space = SymplecticSpace::standard_pairs(1 + i % 4);
    const WeylElement a = random_element(rng, space, 1 + i % 3);
    const WeylElement b = random_element(rng, space, 1 + (i / 2) % 3);
    // (A*)* = A exactly.
    if (max_coeff_deviation(adjoint(adjoint(a)), a) != 0.0) support_ok = false;
    const WeylElement lhs = adjoint(weyl_mul(a, b));
    const WeylElement rhs = weyl_mul(adjoint(b), adjoint(a));
    if (!support_equal(lhs, rhs)) support_ok = false;
    dev = std::max(dev, max_coeff_deviation(lhs, rhs));
  }
  return make_record("weyl.involution", "(AB)* = B*A*", tol, t0, support_ok && dev <= tol,
                     dev, support_ok ? "pairs=200,n<=4" : "support mismatch");
}

CheckRecord check_weyl_associativity(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("weyl.associativity");
  SubstreamRng rng(ctx.seed, 103);
  bool support_ok = true;
  double dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto space = SymplecticSpace::standard_pairs(1 + i % 4);
    const WeylElement a = WeylElement::generator(space, rng.phase_point(space.n));
    const WeylElement b = WeylElement::generator(space, rng.phase_point(space.n));
    const WeylElement c = WeylElement::generator(space, rng.phase_point(space.n));
    const WeylElement lhs = weyl_mul(weyl_mul(a, b), c);
    const WeylElement rhs = weyl_mul(a, weyl_mul(b, c));
    if (!support_equal(lhs, rhs)) support_ok = false;
    dev = std::max(dev, max_coeff_deviation(lhs, rhs));
  }
  return make_record("weyl.associativity", "(AB)C = A(BC)", tol, t0,
                     support_ok && dev <= tol, dev,
                     support_ok ? "triples=200,n<=4" : "support mismatch");
}

CheckRecord check_weyl_commutator(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("weyl.commutator");
  SubstreamRng rng(ctx.seed, 104);
  bool support_ok = true;
  double dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto space = SymplecticSpace::standard_pairs(1 + i % 4);
    const PhasePoint y = rng.phase_point(space.n);
    const WeylElement wy = WeylElement::generator(space, y);
    WeylElement d(space);
    const PhasePoint d1 = rng.phase_point(space.n);
    d.add_term(d1, random_coeff(rng));
    // Every other round forces a support collision between W(y)D and D.
    d.add_term(i % 2 == 0 ? d1 + y : rng.phase_point(space.n), random_coeff(rng));

    const WeylElement lhs = weyl_mul(wy, d) - weyl_mul(d, wy);
    const WeylElement ty = wy - WeylElement::unit(space);
    const WeylElement rhs = weyl_mul(ty, d) - weyl_mul(d, ty);
    if (!support_equal(lhs, rhs)) support_ok = false;
    dev = std::max(dev, max_coeff_deviation(lhs, rhs));
  }
  return make_record("weyl.commutator", "[W(y),D] = [W(y)-1,D]", tol, t0,
                     support_ok && dev <= tol, dev,
                     support_ok ? "rounds=200,n<=4" : "support mismatch");
}

CheckRecord check_weyl_cocycle(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("weyl.cocycle");
  SubstreamRng rng(ctx.seed, 105);
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const auto space = SymplecticSpace::standard_pairs(1 + i % 4);
    const PhasePoint y = rng.phase_point(space.n);
    const PhasePoint z = rng.phase_point(space.n);
    const PhasePoint w = rng.phase_point(space.n);
    if (beta(space, y, z) + beta(space, y + z, w) != beta(space, z, w) + beta(space, y, z + w))
      ++violations;
  }
  return make_record("weyl.cocycle", "beta cocycle identity", tol, t0, violations == 0,
                     static_cast<double>(violations));
}

// ---------------------------------------------------------------------------
// states suite
// ---------------------------------------------------------------------------

CheckRecord check_states_axioms(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.axioms");
  SubstreamRng rng(ctx.seed, 201);
  const auto space = SymplecticSpace::standard_pairs(2);
  const GeneratingFunction gs[] = {GeneratingFunction::dirac_g0(space),
                                   GeneratingFunction::fock(space),
                                   GeneratingFunction::quasifree(space, 2.0)};
  double dev = 0.0;
  bool ok = true;
  for (const auto& g : gs) {
    if (std::abs(g(PhasePoint::zero(2)) - cplx(1.0, 0.0)) > tol) ok = false;
    for (int i = 0; i < 200; ++i) {
      const PhasePoint z = rng.phase_point(2);
      const cplx v = g(z);
      if (std::abs(v) > 1.0 + tol) ok = false;
      dev = std::max(dev, std::abs(g(-z) - std::conj(v)));
    }
    // Linearity of the induced functional.
    const WeylElement a = random_element(rng, space, 3);
    const WeylElement b = random_element(rng, space, 2);
    const cplx alpha = random_coeff(rng);
    dev = std::max(dev, std::abs(evaluate_state(g, alpha * a + b) -
                                 (alpha * evaluate_state(g, a) + evaluate_state(g, b))));
  }
  return make_record("states.axioms", "g(0)=1, |g|<=1, g(-z)=conj g(z), linearity", tol, t0,
                     ok && dev <= tol, dev);
}

CheckRecord check_states_kernel_psd(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.kernel_psd");
  SubstreamRng rng(ctx.seed, 202);
  double min_eig = 1.0;
  for (int set = 0; set < 20; ++set) {
    const std::size_t n = 1 + static_cast<std::size_t>(set % 8);
    const auto space = SymplecticSpace::standard_pairs(n);
    const long size = rng.uniform_int(2, 64);
    std::vector<PhasePoint> points;
    for (long j = 0; j < size; ++j) points.push_back(rng.phase_point(n, 6, 4));
    for (double l : {0.0, 1.0, 2.0, 4.0}) {
      const GeneratingFunction g = l == 0.0 ? GeneratingFunction::dirac_g0(space)
                                            : GeneratingFunction::quasifree(space, l);
      min_eig = std::min(min_eig, kernel_positivity(g, points, tol).min_eigenvalue);
    }
  }
  return make_record("states.kernel_psd", "kernel g(x-y)e^{-i beta(x,y)} is PSD", tol, t0,
                     min_eig >= -tol, min_eig, "sets=20,size<=64,n<=8,l={1,2,4}+g0");
}

CheckRecord check_states_kernel_indefinite(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.kernel_indefinite");
  const auto space = SymplecticSpace::standard_pairs(1);
  const GeneratingFunction one =
      GeneratingFunction::custom(space, [](const PhasePoint&) { return cplx(1.0, 0.0); });
  // Witness triple with beta(y,z) = 355/226, within 4e-8 of pi/2; the 3x3
  // kernel has characteristic polynomial x^3 - 3x^2 + (2 - 2 cos beta), so
  // its smallest eigenvalue is 1 - sqrt(3) + O(beta - pi/2).
  const PhasePoint y({Rational(355, 113)}, {Rational(0)});
  const PhasePoint z({Rational(0)}, {Rational(1)});
  const auto report = kernel_positivity(one, {PhasePoint::zero(1), y, z});
  const double expected = 1.0 - std::sqrt(3.0);
  const bool ok = !report.psd && std::abs(report.min_eigenvalue - expected) <= tol;
  return make_record("states.kernel_indefinite",
                     "constant g on a non-isotropic triple is indefinite", tol, t0, ok,
                     report.min_eigenvalue);
}

CheckRecord check_states_kernel_points(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.kernel_points");
  const auto& points = *ctx.extra_points;
  const auto space = SymplecticSpace::standard_pairs(points.front().block_dim());
  double min_eig = 1.0;
  for (int which = 0; which < 2; ++which) {
    const GeneratingFunction g =
        which == 0 ? GeneratingFunction::dirac_g0(space) : GeneratingFunction::fock(space);
    min_eig = std::min(min_eig, kernel_positivity(g, points, tol).min_eigenvalue);
  }
  return make_record("states.kernel_points", "kernel PSD on the supplied point set", tol, t0,
                     min_eig >= -tol, min_eig,
                     "points=" + std::to_string(points.size()));
}

CheckRecord check_states_dirac_lattice(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.dirac_lattice");
  double dev = 0.0;
  bool ok = true;
  for (std::size_t n : {1u, 2u}) {
    const auto space = SymplecticSpace::standard_pairs(n);
    const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
    std::vector<PhasePoint> gens;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> z1(n, Rational(0)), z2(n, Rational(0));
      z2[i] = 1;
      gens.emplace_back(std::move(z1), std::move(z2));
    }
    if (!isotropy_check(space, gens)) ok = false;
    if (!dirac_check(g0, gens, 5, tol)) ok = false;
    // The Fock state is not Dirac along the same lattice.
    if (dirac_check(GeneratingFunction::fock(space), gens, 1, tol)) ok = false;
    // Direct deviation scan over the radius-5 window.
    std::vector<long> k(n, -5);
    for (;;) {
      PhasePoint y = PhasePoint::zero(n);
      for (std::size_t i = 0; i < n; ++i) y = y + Rational(k[i]) * gens[i];
      dev = std::max(dev, std::abs(g0(y) - cplx(1.0, 0.0)));
      std::size_t i = 0;
      while (i < n && k[i] == 5) k[i++] = -5;
      if (i == n) break;
      ++k[i];
    }
  }
  // Non-isotropic generators must be rejected.
  try {
    const auto space = SymplecticSpace::standard_pairs(1);
    dirac_check(GeneratingFunction::dirac_g0(space),
                {PhasePoint({Rational(1)}, {Rational(0)}),
                 PhasePoint({Rational(0)}, {Rational(1)})},
                1);
    ok = false;
  } catch (const std::invalid_argument&) {
  }
  return make_record("states.dirac_lattice", "g(y) = 1 on the constraint lattice", tol, t0,
                     ok && dev <= tol, dev);
}

CheckRecord check_states_dirac_invariance(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.dirac_invariance");
  SubstreamRng rng(ctx.seed, 203);
  const auto space = SymplecticSpace::standard_pairs(2);
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
  double dev = 0.0;
  for (int i = 0; i < 100; ++i) {
    const WeylElement a = random_element(rng, space, 1 + i % 4);
    const PhasePoint y({Rational(0), Rational(0)}, {rng.rational(), rng.rational()});
    dev = std::max(dev, dirac_invariance_check(g0, a, y));
  }
  return make_record("states.dirac_invariance", "omega(A W(y)) = omega(A) = omega(W(y) A)",
                     tol, t0, dev <= tol, dev, "elements=100,n=2");
}

CheckRecord check_states_phase_identity(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.phase_identity");
  SubstreamRng rng(ctx.seed, 204);
  const auto space = SymplecticSpace::standard_pairs(2);
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
  const std::vector<Rational> grid = {Rational(0),      Rational(1),  Rational(-1),
                                      Rational(1, 2),   Rational(-1, 2),
                                      Rational(1, 4),   Rational(3)};
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    PhasePoint z0 = rng.phase_point(2);
    while (z0.first_block_zero()) z0 = rng.phase_point(2);
    std::size_t idx = z0.first[0] != 0 ? 0 : 1;
    std::vector<Rational> y1(2, Rational(0)), y2(2, Rational(0));
    y2[idx] = 1;
    const PhasePoint y0(std::move(y1), std::move(y2));
    dev = std::max(dev, phase_identity_check(g0, y0, z0, grid));
    dev = std::max(dev, std::abs(g0(z0)));  // the identity must force this to 0
  }
  return make_record("states.phase_identity",
                     "e^{-it beta(y0,z0)} g(z0 + t y0) = g(z0) forces g(z0) = 0", tol, t0,
                     dev <= tol, dev, "points=50,n=2");
}

std::vector<Rational> dyadic_grid(int k_max) {
  std::vector<Rational> grid = {Rational(0)};
  for (int k = 0; k <= k_max; ++k) {
    const Rational t(1, BigInt(1) << k);
    grid.push_back(t);
    grid.push_back(-t);
  }
  return grid;
}

CheckRecord check_states_regularity_fock(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.regularity_fock");
  const auto space = SymplecticSpace::standard_pairs(1);
  const auto grid = dyadic_grid(20);
  bool ok = true;
  double worst_near_zero = 0.0;
  const GeneratingFunction fock = GeneratingFunction::fock(space);
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
  const PhasePoint dirs[] = {PhasePoint({Rational(1)}, {Rational(1)}),
                             PhasePoint({Rational(3)}, {Rational(2)})};
  for (const auto& z : dirs) {
    const auto probe = regularity_probe(fock, z, grid);
    if (probe.classification != RegularityClass::ContinuousAt0) ok = false;
    for (const auto& [t, v] : probe.samples)
      if (t != 0 && abs(t) <= Rational(1, 1 << 20))
        worst_near_zero = std::max(worst_near_zero, std::abs(v - cplx(1.0, 0.0)));
  }
  // Along the constraint directions the Dirac state is constant 1.
  const auto probe = regularity_probe(g0, PhasePoint({Rational(0)}, {Rational(1)}), grid);
  if (probe.classification != RegularityClass::ContinuousAt0) ok = false;
  return make_record("states.regularity_fock", "t -> g(tz) continuous at 0", tol, t0, ok,
                     worst_near_zero);
}

CheckRecord check_states_regularity_dirac(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.regularity_dirac");
  const auto space = SymplecticSpace::standard_pairs(1);
  const auto grid = dyadic_grid(20);
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
  bool ok = true;
  double min_gap = 1e300;
  const PhasePoint dirs[] = {PhasePoint({Rational(1)}, {Rational(0)}),
                             PhasePoint({Rational(1)}, {Rational(5)}),
                             PhasePoint({Rational(2, 3)}, {Rational(1, 7)})};
  for (const auto& z : dirs) {
    const auto probe = regularity_probe(g0, z, grid);
    if (probe.classification != RegularityClass::JumpAt0) ok = false;
    for (const auto& [t, v] : probe.samples)
      if (t != 0) min_gap = std::min(min_gap, std::abs(v - cplx(1.0, 0.0)));
  }
  return make_record("states.regularity_dirac", "t -> g(tz) jumps at 0 off the constraints",
                     tol, t0, ok && min_gap >= 0.5, min_gap);
}

CheckRecord check_states_quasifree(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("states.quasifree_convergence");
  const auto space = SymplecticSpace::standard_pairs(1);
  bool ok = true;
  double dev = 0.0;

  const PhasePoint psi({Rational(1)}, {Rational(0)});
  const auto rows = quasifree_convergence(space, psi, {1.0, 2.0, 4.0, 8.0});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double l = rows[i].l;
    const double closed = std::exp(-l * l / 4.0);
    dev = std::max(dev, std::abs(rows[i].deviation - closed));
    if (i > 0 && !(rows[i].deviation < rows[i - 1].deviation)) ok = false;
  }

  // Constraint direction: deviation 1 - e^{-1/(4 l^2)}, also monotone.
  const PhasePoint psi2({Rational(0)}, {Rational(1)});
  const auto rows2 = quasifree_convergence(space, psi2, {1.0, 2.0, 4.0, 8.0});
  for (std::size_t i = 0; i < rows2.size(); ++i) {
    const double l = rows2[i].l;
    dev = std::max(dev, std::abs(rows2[i].deviation - (1.0 - std::exp(-1.0 / (4.0 * l * l)))));
    if (i > 0 && !(rows2[i].deviation < rows2[i - 1].deviation)) ok = false;
  }
  return make_record("states.quasifree_convergence",
                     "g_l -> g0 pointwise at closed-form rate", tol, t0, ok && dev <= tol, dev);
}

CheckRecord check_states_colombeau(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double required_order = ctx.tol.at("states.colombeau");
  const std::vector<double> eps = {1e-2, 1e-3, 1e-4};
  bool ok = true;
  double min_tail_order = 1e300;
  for (unsigned n : {1u, 2u}) {
    const auto rep = colombeau_scaling_test(0.25, 1.0, n, eps,
                                            static_cast<unsigned>(required_order));
    if (!rep.negligible) ok = false;
    min_tail_order = std::min(min_tail_order, rep.min_fitted_order_tail);
  }
  // Sanity control: a grid stuck near eps = 1 shows no high-order decay.
  if (colombeau_scaling_test(0.25, 1.0, 1, {0.9, 0.8}, 10).negligible) ok = false;
  return make_record("states.colombeau", "exp(-c eps^{-n}) is O(eps^m) for every m",
                     required_order, t0, ok && min_tail_order >= required_order,
                     min_tail_order);
}

// ---------------------------------------------------------------------------
// gns suite (finite-span geometry and the discretized position-space rep)
// ---------------------------------------------------------------------------

CheckRecord check_gns_residual(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("gns.residual_identity");
  SubstreamRng rng(ctx.seed, 301);
  const auto space = SymplecticSpace::standard_pairs(2);
  const GeneratingFunction gs[] = {GeneratingFunction::dirac_g0(space),
                                   GeneratingFunction::fock(space),
                                   GeneratingFunction::quasifree(space, 2.0)};
  double dev = 0.0;
  for (const auto& g : gs) {
    for (int i = 0; i < 100; ++i) {
      const PhasePoint y = rng.phase_point(2);
      const WeylElement ty =
          WeylElement::generator(space, y) - WeylElement::unit(space);
      const cplx quad = evaluate_state(g, weyl_mul(adjoint(ty), ty));
      dev = std::max(dev, std::abs(quad - cplx(gns_fixpoint_residual(g, y), 0.0)));
    }
  }
  return make_record("gns.residual_identity",
                     "omega((W(y)-1)*(W(y)-1)) = 2 - 2 Re g(y)", tol, t0, dev <= tol, dev,
                     "samples=300,n=2");
}

CheckRecord check_gns_gram_kernel(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("gns.gram_kernel");
  SubstreamRng rng(ctx.seed, 302);
  double dev = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 1 + rep % 3;
    const auto space = SymplecticSpace::standard_pairs(n);
    const GeneratingFunction g = rep % 2 == 0 ? GeneratingFunction::fock(space)
                                              : GeneratingFunction::dirac_g0(space);
    std::vector<PhasePoint> pts;
    const long size = rng.uniform_int(2, 12);
    for (long j = 0; j < size; ++j) pts.push_back(rng.phase_point(n, 4, 4));
    const auto span = gns_build(g, pts);
    const auto kern = kernel_matrix(g, pts);
    for (Eigen::Index j = 0; j < kern.rows(); ++j)
      for (Eigen::Index k = 0; k < kern.cols(); ++k)
        dev = std::max(dev, std::abs(span.gram(j, k) - std::conj(kern(k, j))));
  }
  return make_record("gns.gram_kernel", "G_jk = conj(h_kj) between Gram and kernel", tol, t0,
                     dev <= tol, dev);
}

CheckRecord check_gns_rank_classes(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("gns.rank_classes");
  SubstreamRng rng(ctx.seed, 303);
  const auto space = SymplecticSpace::standard_pairs(1);
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
  double worst = 0.0;
  for (std::size_t classes : {1u, 3u, 7u, 16u}) {
    std::vector<PhasePoint> pts;
    for (std::size_t c = 0; c < classes; ++c) {
      const Rational block(static_cast<long>(c), 1);
      const long copies = rng.uniform_int(1, 3);
      for (long r = 0; r < copies; ++r)
        pts.push_back(PhasePoint({block}, {rng.rational()}));
    }
    const auto span = gns_build(g0, pts);
    worst = std::max(worst, std::abs(static_cast<double>(span.rank()) -
                                     static_cast<double>(classes)));
  }
  return make_record("gns.rank_classes", "Gram rank = number of distinct first blocks", tol,
                     t0, worst <= tol, worst, "classes={1,3,7,16}");
}

CheckRecord check_gns_orthogonality(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("gns.orthogonality");
  SubstreamRng rng(ctx.seed, 304);
  const auto space = SymplecticSpace::standard_pairs(1);
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(space);
  double dev = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<PhasePoint> pts;
    for (int c = 0; c < 4; ++c) {
      const Rational block = rng.rational(6, 3);
      for (int r = 0; r < 3; ++r) pts.push_back(PhasePoint({block}, {rng.rational()}));
    }
    const auto scan = gns_orthogonality_scan(gns_build(g0, pts));
    dev = std::max({dev, scan.max_cross_class, scan.max_within_modulus_dev});
  }
  return make_record("gns.orthogonality",
                     "cross-class Gram entries vanish, in-class entries are unimodular", tol,
                     t0, dev <= tol, dev);
}

CheckRecord check_grid_weyl_relation(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("grid.weyl_relation");
  SubstreamRng rng(ctx.seed, 305);
  const GridRep rep(1024, 16.0);
  const auto space = SymplecticSpace::standard_pairs(1);
  const GridVector omega = rep.gaussian_vector();
  const GridVector shifted =
      grid_weyl_apply(rep, PhasePoint({Rational(1, 2)}, {Rational(3, 4)}), omega);
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto pick = [&rng] { return Rational(rng.uniform_int(-64, 64), 64); };
    const PhasePoint y({pick()}, {pick()});
    const PhasePoint z({pick()}, {pick()});
    const GridVector& psi = i % 10 == 9 ? shifted : omega;
    const GridVector lhs = grid_weyl_apply(rep, y, grid_weyl_apply(rep, z, psi));
    GridVector rhs = grid_weyl_apply(rep, y + z, psi);
    const cplx phase = std::polar(1.0, to_double(beta(space, y, z)));
    GridVector diff(rhs.size());
    for (std::size_t j = 0; j < rhs.size(); ++j) diff[j] = lhs[j] - phase * rhs[j];
    dev = std::max(dev, rep.norm(diff));
  }
  return make_record("grid.weyl_relation", "W(y)W(z) = e^{i beta(y,z)} W(y+z) on the grid",
                     tol, t0, dev <= tol, dev, "pairs=50,N=1024,X=16");
}

CheckRecord check_grid_fock_match(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("grid.fock_match");
  SubstreamRng rng(ctx.seed, 306);
  const GridRep rep(1024, 16.0);
  const GridVector omega = rep.gaussian_vector();
  std::vector<PhasePoint> zs = {PhasePoint({Rational(4)}, {Rational(0)}),
                                PhasePoint({Rational(0)}, {Rational(4)}),
                                PhasePoint({Rational(0)}, {Rational(0)})};
  while (zs.size() < 100) {
    const PhasePoint z({Rational(rng.uniform_int(-90, 90), 32)},
                       {Rational(rng.uniform_int(-90, 90), 32)});
    if (z.norm_sq() <= 16) zs.push_back(z);
  }
  const auto values = vector_function(rep, omega, zs);
  double dev = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const double target = std::exp(-to_double(zs[i].norm_sq()) / 4.0);
    dev = std::max(dev, std::abs(values[i] - cplx(target, 0.0)));
  }
  return make_record("grid.fock_match", "f_Omega(z) = exp(-||z||^2/4)", tol, t0, dev <= tol,
                     dev, "points=100,|z|<=4");
}

CheckRecord check_grid_decay(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("grid.decay");
  const GridRep rep(1024, 16.0);
  const auto rows =
      c0_decay_scan(rep, {{1.0, rep.gaussian_vector()}}, {0.0, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0});
  bool ok = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].max_abs < rows[i - 1].max_abs)) ok = false;
  double at4 = 0.0, at8 = 0.0;
  for (const auto& r : rows) {
    if (r.radius == 4.0) at4 = r.max_abs;
    if (r.radius == 8.0) at8 = r.max_abs;
  }
  if (!(at8 < 0.01)) ok = false;
  return make_record("grid.decay", "f_Omega vanishes at infinity", tol, t0, ok && at4 <= tol,
                     at4);
}

// ---------------------------------------------------------------------------
// torus suite
// ---------------------------------------------------------------------------

CheckRecord check_torus_relation(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("torus.relation");
  double dev = 0.0;
  for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 5}}) {
    const TorusRep rep = torus_build(p, q);
    dev = std::max(dev, torus_relation_deviation(rep, q));
  }
  return make_record("torus.relation", "V(m)V(n) = e^{i theta (m1 n2 - m2 n1)} V(m+n)", tol,
                     t0, dev <= tol, dev);
}

CheckRecord check_torus_trace(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("torus.trace");
  SubstreamRng rng(ctx.seed, 401);
  const std::vector<std::pair<long, long>> pqs = {{1, 2}, {1, 3}, {2, 5}};
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto [p, q] = pqs[i % pqs.size()];
    const TorusRep rep = torus_build(p, q);
    const auto space = SymplecticSpace::lattice_z2(rep.theta);
    WeylElement elem(space);
    const long w1 = rep.faithful_m1_window();
    const long terms = 1 + i % 4;
    for (long t = 0; t < terms; ++t) {
      const long m1 = rng.uniform_int(-(w1 - 1), w1 - 1);
      const long m2 = rng.uniform_int(-(q - 1), q - 1);
      elem.add_term(PhasePoint({Rational(m1)}, {Rational(m2)}), random_coeff(rng));
    }
    if (i % 2 == 0) elem.add_term(PhasePoint::zero(1), random_coeff(rng));
    const cplx c0 = elem.coefficient(PhasePoint::zero(1));
    dev = std::max(dev, std::abs(torus_trace_state(rep, elem) - c0));
  }
  return make_record("torus.trace", "normalized trace picks the W(0,0) coefficient", tol, t0,
                     dev <= tol, dev, "elements=50,(p,q)={(1,2),(1,3),(2,5)}");
}

// ---------------------------------------------------------------------------
// measures suite
// ---------------------------------------------------------------------------

Eigen::VectorXd random_dual(SubstreamRng& rng, std::size_t d) {
  Eigen::VectorXd u(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < u.size(); ++i) u[i] = rng.uniform(-3.0, 3.0);
  return u;
}

AtomicMeasure random_measure(SubstreamRng& rng, std::size_t d, long max_atoms,
                             bool positive = false, bool include_zero = false) {
  AtomicMeasure m(d);
  const long atoms = rng.uniform_int(1, max_atoms);
  for (long a = 0; a < atoms; ++a) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < x.size(); ++i)
      x[i] = static_cast<double>(rng.uniform_int(-8, 8)) / 2.0;
    m.add_atom(std::move(x),
               positive ? cplx(rng.uniform(0.1, 2.0), 0.0) : random_coeff(rng));
  }
  if (include_zero)
    m.add_atom(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d)),
               positive ? cplx(rng.uniform(0.1, 2.0), 0.0) : random_coeff(rng));
  return m;
}

CheckRecord check_measures_duality(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("measures.duality");
  SubstreamRng rng(ctx.seed, 501);
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 1 + i % 3;
    const AtomicMeasure mu = random_measure(rng, d, 5);
    const AtomicMeasure nu = random_measure(rng, d, 5);
    dev = std::max(dev, duality_check(mu, nu));
  }
  return make_record("measures.duality", "<F mu, nu> = <mu, F nu>", tol, t0, dev <= tol, dev,
                     "pairs=50,d<=3");
}

CheckRecord check_measures_product_lemma(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("measures.product_lemma");
  SubstreamRng rng(ctx.seed, 502);
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const SplitSpace split{1 + static_cast<std::size_t>(i) % 3,
                           1 + (static_cast<std::size_t>(i) / 2) % 3};
    const AtomicMeasure mu1 = random_measure(rng, split.d1, 4, false, i % 2 == 0);
    const AtomicMeasure mu2 = random_measure(rng, split.d2, 3);
    dev = std::max(dev, product_lemma_check(split, mu1, mu2));
  }
  return make_record("measures.product_lemma",
                     "1_L.(mu1 x mu2) = mu1({0}) (delta0 x mu2)", tol, t0, dev <= tol, dev,
                     "configs=50,d1,d2<=3");
}

CheckRecord check_measures_identity21(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("measures.identity21");
  SubstreamRng rng(ctx.seed, 503);
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const SplitSpace split{1 + static_cast<std::size_t>(i) % 3,
                           1 + (static_cast<std::size_t>(i) / 3) % 3};
    const AtomicMeasure mu2 = random_measure(rng, split.d2, 3);
    std::vector<Eigen::VectorXd> samples;
    for (int s = 0; s < 20; ++s) samples.push_back(random_dual(rng, split.dim()));
    dev = std::max(dev, identity21_check(split, mu2, samples));
  }
  return make_record("measures.identity21", "F(1_L.mu)(u1,u2) = F mu2(u2)", tol, t0,
                     dev <= tol, dev, "configs=50,duals=20");
}

CheckRecord check_measures_identity23(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("measures.identity23");
  SubstreamRng rng(ctx.seed, 504);
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const SplitSpace split{1 + static_cast<std::size_t>(i) % 3,
                           1 + (static_cast<std::size_t>(i) / 2) % 3};
    const AtomicMeasure mu2 = random_measure(rng, split.d2, 3);
    const AtomicMeasure rho1 = random_measure(rng, split.d1, 3, /*positive=*/true);
    std::vector<Eigen::VectorXd> samples;
    for (int s = 0; s < 20; ++s) samples.push_back(random_dual(rng, split.dim()));
    dev = std::max(dev, identity23_check(split, mu2, rho1, samples));
  }
  return make_record("measures.identity23",
                     "||rho|| F(1_L.mu) = (1_{Lperp}.rho) * F mu", tol, t0, dev <= tol, dev,
                     "configs=50,duals=20");
}

CheckRecord check_measures_bochner(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double tol = ctx.tol.at("measures.bochner");
  const auto result = finite_bochner_check(2, {0}, Eigen::VectorXd::Ones(2));
  const double witness = 2.0 * std::numbers::pi * std::sqrt(2.0 * std::numbers::pi);
  const double dev = std::max(result.relative_deviation,
                              std::abs(result.lhs - witness) / witness);
  return make_record("measures.bochner",
                     "F delta_L0 = (2 pi)^{dim L0} delta_{L0 perp} on a Gaussian witness",
                     tol, t0, dev <= tol, dev);
}

CheckRecord check_measures_mc_char(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double max_sigmas = ctx.tol.at("measures.mc_char");
  double worst = 0.0, max_stderr = 0.0;
  bool ok = true;
  int case_id = 0;
  for (double l : {1.0, 2.0}) {
    for (std::size_t d : {3u, 8u}) {
      const GaussianSpec spec(l * l / 2.0 *
                              Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d),
                                                        static_cast<Eigen::Index>(d)));
      Eigen::VectorXd phi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
      phi[0] = 1.0;
      if (d > 1) phi[1] = 0.5;
      const auto est = gaussian_mc_functional(spec, phi, 100000, ctx.seed + case_id++);
      // Closed-form target; equals the quasifree value e^{-l^2 ||phi||^2 / 4}.
      const double target = spec.characteristic(phi);
      const double dev = std::abs(est.estimate - cplx(target, 0.0));
      const double sig = est.stderr_ > 0 ? dev / est.stderr_ : (dev > 0 ? 1e300 : 0.0);
      worst = std::max(worst, sig);
      max_stderr = std::max(max_stderr, est.stderr_);
      if (std::abs(target - std::exp(-l * l * phi.squaredNorm() / 4.0)) > 1e-15) ok = false;
    }
  }
  return make_record("measures.mc_char", "E e^{i<u,phi>} = exp(-phi' Sigma phi / 2)",
                     max_sigmas, t0, ok && worst <= max_sigmas, worst,
                     "samples=1e5,l={1,2},d={3,8},max_stderr=" + std::to_string(max_stderr));
}

CheckRecord check_measures_mc_moment(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double max_sigmas = ctx.tol.at("measures.mc_moment");
  double worst = 0.0, max_stderr = 0.0;
  int case_id = 100;
  for (double l : {1.0, 2.0}) {
    for (std::size_t d : {2u, 8u}) {
      const GaussianSpec spec(l * l / 2.0 *
                              Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d),
                                                        static_cast<Eigen::Index>(d)));
      Eigen::VectorXd phi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
      Eigen::VectorXd psi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
      phi[0] = 1.0;
      psi[1] = 1.0;  // orthogonal pair, target 0
      auto est = gaussian_mc_moment(spec, phi, psi, 100000, ctx.seed + case_id++);
      double dev = std::abs(est.estimate - cplx(phi.dot(spec.covariance * psi), 0.0));
      worst = std::max(worst, est.stderr_ > 0 ? dev / est.stderr_ : (dev > 0 ? 1e300 : 0.0));
      max_stderr = std::max(max_stderr, est.stderr_);

      est = gaussian_mc_moment(spec, phi, phi, 100000, ctx.seed + case_id++);
      dev = std::abs(est.estimate - cplx(phi.dot(spec.covariance * phi), 0.0));
      worst = std::max(worst, est.stderr_ > 0 ? dev / est.stderr_ : (dev > 0 ? 1e300 : 0.0));
      max_stderr = std::max(max_stderr, est.stderr_);
    }
  }
  return make_record("measures.mc_moment", "E <u,phi><u,psi> = phi' Sigma psi", max_sigmas,
                     t0, worst <= max_sigmas, worst,
                     "samples=1e5,l={1,2},d={2,8},max_stderr=" + std::to_string(max_stderr));
}

CheckRecord check_measures_product_form(const CheckContext& ctx) {
  const auto t0 = Clock::now();
  const double max_sigmas = ctx.tol.at("measures.product_form");
  const GaussianSpec spec(Eigen::MatrixXd::Identity(2, 2));
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(2);
  e1[0] = 1.0;
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  const auto rows =
      product_form_check(spec, spec, {{e1, e1}, {e1, zero}}, 100000, ctx.seed + 7);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.sigmas);
  return make_record("measures.product_form", "product law factorizes the functional",
                     max_sigmas, t0, worst <= max_sigmas, worst);
}

// ---------------------------------------------------------------------------

const std::map<std::string, std::vector<std::string>>& suite_layout() {
  static const std::map<std::string, std::vector<std::string>> layout = {
      {"weyl",
       {"weyl.unitarity", "weyl.involution", "weyl.associativity", "weyl.commutator",
        "weyl.cocycle"}},
      {"states",
       {"states.axioms", "states.kernel_psd", "states.kernel_indefinite",
        "states.dirac_lattice", "states.dirac_invariance", "states.phase_identity",
        "states.regularity_fock", "states.regularity_dirac",
        "states.quasifree_convergence", "states.colombeau"}},
      {"gns",
       {"gns.residual_identity", "gns.gram_kernel", "gns.rank_classes", "gns.orthogonality",
        "grid.weyl_relation", "grid.fock_match", "grid.decay"}},
      {"torus", {"torus.relation", "torus.trace"}},
      {"measures",
       {"measures.duality", "measures.product_lemma", "measures.identity21",
        "measures.identity23", "measures.bochner", "measures.mc_char", "measures.mc_moment",
        "measures.product_form"}},
  };
  return layout;
}

const std::map<std::string, CheckFn>& check_registry() {
  static const std::map<std::string, CheckFn> registry = {
      {"weyl.unitarity", check_weyl_unitarity},
      {"weyl.involution", check_weyl_involution},
      {"weyl.associativity", check_weyl_associativity},
      {"weyl.commutator", check_weyl_commutator},
      {"weyl.cocycle", check_weyl_cocycle},
      {"states.axioms", check_states_axioms},
      {"states.kernel_psd", check_states_kernel_psd},
      {"states.kernel_indefinite", check_states_kernel_indefinite},
      {"states.kernel_points", check_states_kernel_points},
      {"states.dirac_lattice", check_states_dirac_lattice},
      {"states.dirac_invariance", check_states_dirac_invariance},
      {"states.phase_identity", check_states_phase_identity},
      {"states.regularity_fock", check_states_regularity_fock},
      {"states.regularity_dirac", check_states_regularity_dirac},
      {"states.quasifree_convergence", check_states_quasifree},
      {"states.colombeau", check_states_colombeau},
      {"gns.residual_identity", check_gns_residual},
      {"gns.gram_kernel", check_gns_gram_kernel},
      {"gns.rank_classes", check_gns_rank_classes},
      {"gns.orthogonality", check_gns_orthogonality},
      {"grid.weyl_relation", check_grid_weyl_relation},
      {"grid.fock_match", check_grid_fock_match},
      {"grid.decay", check_grid_decay},
      {"torus.relation", check_torus_relation},
      {"torus.trace", check_torus_trace},
      {"measures.duality", check_measures_duality},
      {"measures.product_lemma", check_measures_product_lemma},
      {"measures.identity21", check_measures_identity21},
      {"measures.identity23", check_measures_identity23},
      {"measures.bochner", check_measures_bochner},
      {"measures.mc_char", check_measures_mc_char},
      {"measures.mc_moment", check_measures_mc_moment},
      {"measures.product_form", check_measures_product_form},
  };
  return registry;
}

}  // namespace

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> defaults = {
      {"weyl.unitarity", 1e-12},
      {"weyl.involution", 1e-12},
      {"weyl.associativity", 1e-12},
      {"weyl.commutator", 1e-12},
      {"weyl.cocycle", 0.5},
      {"states.axioms", 1e-12},
      {"states.kernel_psd", 1e-9},
      {"states.kernel_indefinite", 1e-6},
      {"states.kernel_points", 1e-9},
      {"states.dirac_lattice", 1e-12},
      {"states.dirac_invariance", 1e-12},
      {"states.phase_identity", 1e-12},
      {"states.regularity_fock", 0.5},
      {"states.regularity_dirac", 0.5},
      {"states.quasifree_convergence", 1e-14},
      {"states.colombeau", 10.0},
      {"gns.residual_identity", 1e-12},
      {"gns.gram_kernel", 1e-12},
      {"gns.rank_classes", 0.5},
      {"gns.orthogonality", 1e-12},
      {"grid.weyl_relation", 1e-8},
      {"grid.fock_match", 1e-6},
      {"grid.decay", 0.02},
      {"torus.relation", 1e-12},
      {"torus.trace", 1e-12},
      {"measures.duality", 1e-12},
      {"measures.product_lemma", 1e-12},
      {"measures.identity21", 1e-12},
      {"measures.identity23", 1e-12},
      {"measures.bochner", 1e-6},
      {"measures.mc_char", 4.0},
      {"measures.mc_moment", 4.0},
      {"measures.product_form", 4.0},
  };
  return defaults;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto& layout = suite_layout();
  std::vector<std::string> suites;
  if (config.suite == "all") {
    for (const auto& [name, checks] : layout) suites.push_back(name);
  } else if (layout.count(config.suite)) {
    suites.push_back(config.suite);
  } else {
    throw std::invalid_argument("unknown suite '" + config.suite + "'");
  }

  std::map<std::string, double> tol = default_tolerances();
  for (const auto& [name, value] : config.tolerances) {
    if (!tol.count(name))
      throw std::invalid_argument("unknown tolerance name '" + name + "'");
    if (!(value > 0.0))
      throw std::invalid_argument("tolerance '" + name + "' must be positive");
    tol[name] = value;
  }

  std::vector<PhasePoint> extra_points;
  if (config.points_path) extra_points = read_points_csv_file(*config.points_path);

  CheckContext ctx{config.seed, tol, extra_points.empty() ? nullptr : &extra_points};

  SuiteReport report;
  report.suite = config.suite;
  report.seed = config.seed;
  const auto& registry = check_registry();
  for (const auto& suite : suites) {
    for (const auto& id : layout.at(suite)) report.checks.push_back(registry.at(id)(ctx));
    if (suite == "states" && ctx.extra_points)
      report.checks.push_back(registry.at("states.kernel_points")(ctx));
  }

  if (config.out_path) write_report_file(report, *config.out_path, config.format);
  return report;
}

}  // namespace weyl
