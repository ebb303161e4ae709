#include "doctest.h"

#include <cmath>

#include "test_helpers.hpp"
#include "weyl/state_checks.hpp"

using namespace weyl;
using namespace weyl::test;

namespace {

PhasePoint pt1(long a, long b) { return PhasePoint({Rational(a)}, {Rational(b)}); }

const SymplecticSpace kSpace1 = SymplecticSpace::standard_pairs(1);

}  // namespace

TEST_CASE("state evaluation on generators") {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);
  CHECK(evaluate_state(g0, WeylElement::generator(kSpace1, pt1(0, 7))) == cplx(1.0, 0.0));
  CHECK(evaluate_state(g0, WeylElement::generator(kSpace1, pt1(1, 0))) == cplx(0.0, 0.0));
  CHECK(evaluate_state(g0, WeylElement::unit(kSpace1)) == cplx(1.0, 0.0));

  const GeneratingFunction fock = GeneratingFunction::fock(kSpace1);
  CHECK(evaluate_state(fock, WeylElement::unit(kSpace1)) == cplx(1.0, 0.0));
  CHECK(std::abs(evaluate_state(fock, WeylElement::generator(kSpace1, pt1(1, 1))) -
                 cplx(std::exp(-0.5), 0.0)) < 1e-15);

  // Space mismatch is rejected.
  const auto space2 = SymplecticSpace::standard_pairs(2);
  CHECK_THROWS_AS(evaluate_state(g0, WeylElement::unit(space2)), std::invalid_argument);

  // |omega(A)| <= l1(A) and linearity.
  SubstreamRng rng(31, 0);
  for (int i = 0; i < 30; ++i) {
    const WeylElement a = random_element(rng, kSpace1, 3);
    const WeylElement b = random_element(rng, kSpace1, 2);
    const cplx alpha = random_coeff(rng);
    for (const auto& g : {g0, fock}) {
      CHECK(std::abs(evaluate_state(g, a)) <= l1_norm(a) + 1e-12);
      CHECK(std::abs(evaluate_state(g, alpha * a + b) -
                     (alpha * evaluate_state(g, a) + evaluate_state(g, b))) < 1e-12);
    }
  }
}

TEST_CASE("kernel matrix examples") {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);

  const auto single = kernel_matrix(g0, {PhasePoint::zero(1)});
  CHECK(single.rows() == 1);
  CHECK(std::abs(single(0, 0) - cplx(1.0, 0.0)) < 1e-15);

  // Both points lie in the constraint subspace, so all entries are 1.
  const auto ones = kernel_matrix(g0, {PhasePoint::zero(1), pt1(0, 1)});
  for (Eigen::Index j = 0; j < 2; ++j)
    for (Eigen::Index k = 0; k < 2; ++k) CHECK(std::abs(ones(j, k) - cplx(1.0, 0.0)) < 1e-15);

  const GeneratingFunction fock = GeneratingFunction::fock(kSpace1);
  const PhasePoint z = pt1(1, 1);
  const auto m = kernel_matrix(fock, {PhasePoint::zero(1), z});
  const double a = std::exp(-0.5);  // e^{-||z||^2/4} with ||z||^2 = 2
  CHECK(std::abs(m(0, 1) - cplx(a, 0.0)) < 1e-15);
  CHECK(std::abs(m(1, 0) - cplx(a, 0.0)) < 1e-15);
  CHECK(std::abs(m(0, 0) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("kernel positivity for the built-in states") {
  SubstreamRng rng(32, 0);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto space = SymplecticSpace::standard_pairs(n);
    std::vector<PhasePoint> pts;
    const long size = rng.uniform_int(2, 24);
    for (long j = 0; j < size; ++j) pts.push_back(rng.phase_point(n, 5, 4));
    for (double l : {0.0, 1.0, 2.0, 4.0}) {
      const GeneratingFunction g = l == 0.0 ? GeneratingFunction::dirac_g0(space)
                                            : GeneratingFunction::quasifree(space, l);
      const auto report = kernel_positivity(g, pts);
      CHECK(report.psd);
      CHECK(report.min_eigenvalue >= -1e-9);
    }
  }
}

TEST_CASE("constant g on a non-isotropic triple is indefinite") {
  const GeneratingFunction one =
      GeneratingFunction::custom(kSpace1, [](const PhasePoint&) { return cplx(1.0, 0.0); });
  const PhasePoint y({Rational(355, 113)}, {Rational(0)});  // beta(y,z) = 355/226 ~ pi/2
  const PhasePoint z = pt1(0, 1);
  const auto m = kernel_matrix(one, {PhasePoint::zero(1), y, z});

  // Independent oracle: det = 2 cos(beta) - 2 and the characteristic
  // polynomial x^3 - 3x^2 + (2 - 2 cos beta) give min eigenvalue 1 - sqrt(3)
  // at beta = pi/2; the rational surrogate moves it by less than 1e-7.
  const double b = 355.0 / 226.0;
  CHECK(std::abs(m.determinant().real() - (2.0 * std::cos(b) - 2.0)) < 1e-12);
  CHECK(std::abs(m.determinant().real() - (-2.0)) < 1e-6);

  const auto report = positivity_check(m);
  CHECK_FALSE(report.psd);
  CHECK(report.min_eigenvalue == doctest::Approx(1.0 - std::sqrt(3.0)).epsilon(1e-6));
}

TEST_CASE("positivity_check rejects non-Hermitian input") {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(1, 0), cplx(0.5, 0.2), cplx(0.5, 0.2), cplx(1, 0);
  CHECK_THROWS_AS(positivity_check(m), std::invalid_argument);
}

TEST_CASE("dirac checks") {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);
  const std::vector<PhasePoint> gens = {pt1(0, 1)};
  CHECK(dirac_check(g0, gens, 5));
  CHECK_FALSE(dirac_check(GeneratingFunction::fock(kSpace1), gens, 1));
  CHECK_THROWS_AS(dirac_check(g0, {pt1(1, 0), pt1(0, 1)}, 1), std::invalid_argument);

  SubstreamRng rng(33, 0);
  for (int i = 0; i < 20; ++i) {
    const WeylElement a = random_element(rng, kSpace1, 3);
    CHECK(dirac_invariance_check(g0, a, PhasePoint({Rational(0)}, {Rational(3, 2)})) < 1e-12);
  }
  // A non-constraint direction breaks invariance for generic A.
  const WeylElement a = WeylElement::generator(kSpace1, pt1(1, 0));
  CHECK(dirac_invariance_check(g0, a, pt1(-1, 0)) > 0.5);
}

TEST_CASE("regularity probes") {
  std::vector<Rational> grid = {Rational(0)};
  for (int k = 0; k <= 20; ++k) {
    grid.push_back(Rational(1, BigInt(1) << k));
    grid.push_back(Rational(-1, BigInt(1) << k));
  }

  const GeneratingFunction fock = GeneratingFunction::fock(kSpace1);
  const auto cont = regularity_probe(fock, pt1(1, 1), grid);
  CHECK(cont.classification == RegularityClass::ContinuousAt0);
  for (const auto& [t, v] : cont.samples) {
    const double td = to_double(t);
    CHECK(std::abs(v - cplx(std::exp(-td * td * 2.0 / 4.0), 0.0)) < 1e-15);
  }

  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);
  const auto jump = regularity_probe(g0, pt1(1, 0), grid);
  CHECK(jump.classification == RegularityClass::JumpAt0);
  for (const auto& [t, v] : jump.samples)
    CHECK(v == (t == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));

  const auto along_l = regularity_probe(g0, pt1(0, 1), grid);
  CHECK(along_l.classification == RegularityClass::ContinuousAt0);

  CHECK_THROWS_AS(regularity_probe(g0, pt1(1, 0), {Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(regularity_probe(g0, pt1(1, 0), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("phase identity forces the state to vanish off the annihilator") {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);
  const std::vector<Rational> grid = {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                      Rational(3)};
  const PhasePoint y0 = pt1(0, 1);

  CHECK(phase_identity_check(g0, y0, pt1(1, 0), grid) == 0.0);
  CHECK(g0(pt1(1, 0)) == cplx(0.0, 0.0));
  CHECK(phase_identity_check(g0, y0, pt1(1, 5), grid) == 0.0);
  CHECK(g0(pt1(1, 5)) == cplx(0.0, 0.0));

  // t = 0 alone holds trivially.
  CHECK(phase_identity_check(g0, y0, pt1(1, 0), {Rational(0)}) == 0.0);

  // beta(y0, z0) = 0 is rejected, as is a non-Dirac g.
  CHECK_THROWS_AS(phase_identity_check(g0, y0, pt1(0, 5), grid), std::invalid_argument);
  CHECK_THROWS_AS(
      phase_identity_check(GeneratingFunction::fock(kSpace1), y0, pt1(1, 0), grid),
      std::invalid_argument);
}

TEST_CASE("quasifree convergence table") {
  const PhasePoint psi = pt1(1, 0);
  const auto rows = quasifree_convergence(kSpace1, psi, {1.0, 2.0, 4.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].deviation == doctest::Approx(0.7788007830714049).epsilon(1e-14));
  CHECK(rows[1].deviation == doctest::Approx(0.36787944117144233).epsilon(1e-14));
  CHECK(rows[2].deviation == doctest::Approx(0.018315638888734179).epsilon(1e-14));

  const auto rows2 = quasifree_convergence(kSpace1, pt1(0, 1), {1.0, 2.0, 4.0});
  for (std::size_t i = 0; i < rows2.size(); ++i) {
    const double l = rows2[i].l;
    CHECK(rows2[i].deviation ==
          doctest::Approx(1.0 - std::exp(-1.0 / (4.0 * l * l))).epsilon(1e-14));
    if (i > 0) CHECK(rows2[i].deviation < rows2[i - 1].deviation);
  }

  const auto rows3 = quasifree_convergence(kSpace1, PhasePoint::zero(1), {1.0, 2.0});
  for (const auto& r : rows3) CHECK(r.deviation == 0.0);
}

TEST_CASE("scaling test for Gaussian functionals") {
  SUBCASE("frozen value at eps = 0.1") {
    const auto rep = colombeau_scaling_test(0.25, 1.0, 1, {0.1}, 3);
    CHECK(rep.values[0] == doctest::Approx(0.0820849986238988).epsilon(1e-14));
  }

  SUBCASE("negligible on the decaying grid") {
    for (unsigned n : {1u, 2u}) {
      const auto rep = colombeau_scaling_test(0.25, 1.0, n, {1e-2, 1e-3, 1e-4}, 10);
      CHECK(rep.negligible);
      CHECK(rep.min_fitted_order_tail >= 10.0);
    }
  }

  SUBCASE("faster decay in higher dimension") {
    const double v1 = colombeau_scaling_test(0.25, 1.0, 1, {0.1}, 1).values[0];
    const double v2 = colombeau_scaling_test(0.25, 1.0, 2, {0.1}, 1).values[0];
    CHECK(v2 < v1);
  }

  SUBCASE("endpoint eps = 1 alone passes via the constants") {
    const auto rep = colombeau_scaling_test(0.25, 1.0, 1, {1.0}, 10);
    CHECK(rep.values[0] == doctest::Approx(std::exp(-0.25)).epsilon(1e-14));
    CHECK(rep.negligible);
  }

  SUBCASE("a grid pinned near eps = 1 shows no high-order decay") {
    CHECK_FALSE(colombeau_scaling_test(0.25, 1.0, 1, {0.9, 0.8}, 10).negligible);
  }

  SUBCASE("quasifree overload extracts the exponent") {
    const auto g2 = GeneratingFunction::quasifree(kSpace1, 2.0);
    const auto rep = colombeau_scaling_test(g2, 1.0, 1, {1e-2, 1e-3}, 5);
    CHECK(rep.values[0] == doctest::Approx(std::exp(-100.0)).epsilon(1e-12));
    CHECK_THROWS_AS(
        colombeau_scaling_test(GeneratingFunction::dirac_g0(kSpace1), 1.0, 1, {0.5}, 2),
        std::invalid_argument);
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(colombeau_scaling_test(0.25, 1.0, 1, {}, 2), std::invalid_argument);
    CHECK_THROWS_AS(colombeau_scaling_test(0.25, 1.0, 1, {1.5}, 2), std::invalid_argument);
    CHECK_THROWS_AS(colombeau_scaling_test(0.25, 1.0, 1, {0.5}, 0), std::invalid_argument);
  }
}

TEST_CASE("custom generating functions are spot checked") {
  // Valid: a genuine positive-definite example.
  const auto ok = GeneratingFunction::custom(kSpace1, [](const PhasePoint& z) {
    return cplx(std::exp(-to_double(z.norm_sq())), 0.0);
  });
  CHECK(ok(PhasePoint::zero(1)) == cplx(1.0, 0.0));

  // g(0) != 1.
  CHECK_THROWS_AS(GeneratingFunction::custom(
                      kSpace1, [](const PhasePoint&) { return cplx(0.5, 0.0); }),
                  std::invalid_argument);
  // |g| > 1 off the origin.
  CHECK_THROWS_AS(GeneratingFunction::custom(kSpace1,
                                             [](const PhasePoint& z) {
                                               return z.is_zero() ? cplx(1.0, 0.0)
                                                                  : cplx(2.0, 0.0);
                                             }),
                  std::invalid_argument);
  // Hermiticity failure: constant imaginary part gives g(-z) != conj g(z).
  CHECK_THROWS_AS(GeneratingFunction::custom(kSpace1,
                                             [](const PhasePoint& z) {
                                               return z.is_zero() ? cplx(1.0, 0.0)
                                                                  : cplx(0.5, 0.25);
                                             }),
                  std::invalid_argument);
}

TEST_CASE("quadratic null identity") {
  SubstreamRng rng(34, 0);
  const auto space = SymplecticSpace::standard_pairs(2);
  const GeneratingFunction gs[] = {GeneratingFunction::dirac_g0(space),
                                   GeneratingFunction::fock(space),
                                   GeneratingFunction::quasifree(space, 3.0)};
  for (const auto& g : gs) {
    for (int i = 0; i < 25; ++i) {
      const PhasePoint y = rng.phase_point(2);
      const WeylElement ty = WeylElement::generator(space, y) - WeylElement::unit(space);
      const cplx quad = evaluate_state(g, weyl_mul(adjoint(ty), ty));
      CHECK(std::abs(quad - cplx(2.0 - 2.0 * g(y).real(), 0.0)) < 1e-12);
    }
  }
}
