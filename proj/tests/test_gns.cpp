#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

#include "test_helpers.hpp"
#include "weyl/gns.hpp"

using namespace weyl;
using namespace weyl::test;

namespace {

PhasePoint pt1(long a, long b) { return PhasePoint({Rational(a)}, {Rational(b)}); }

const SymplecticSpace kSpace1 = SymplecticSpace::standard_pairs(1);

}  // namespace

TEST_CASE("constraint state span collapses along the constraint directions") {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);
  const auto span = gns_build(g0, {PhasePoint::zero(1), pt1(0, 1)});

  for (Eigen::Index j = 0; j < 2; ++j)
    for (Eigen::Index k = 0; k < 2; ++k)
      CHECK(std::abs(span.gram(j, k) - cplx(1.0, 0.0)) < 1e-15);

  CHECK(span.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(span.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  REQUIRE(span.null_basis.cols() == 1);
  CHECK(span.rank() == 1);

  // Null vector is (1,-1)/sqrt(2) up to phase: W(0,1) Omega = Omega in the quotient.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(span.null_basis(0, 0)) - inv_sqrt2) < 1e-12);
  CHECK(std::abs(span.null_basis(0, 0) + span.null_basis(1, 0)) < 1e-12);
  CHECK((span.gram * span.null_basis).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fock span has no null directions") {
  const GeneratingFunction fock = GeneratingFunction::fock(kSpace1);
  const PhasePoint z = pt1(1, 1);
  const auto span = gns_build(fock, {PhasePoint::zero(1), z});
  const double a = std::exp(-0.5);
  CHECK(span.eigenvalues[0] == doctest::Approx(1.0 - a).epsilon(1e-12));
  CHECK(span.eigenvalues[1] == doctest::Approx(1.0 + a).epsilon(1e-12));
  CHECK(span.null_basis.cols() == 0);
  CHECK(span.rank() == 2);
}

TEST_CASE("single point span") {
  const auto span = gns_build(GeneratingFunction::fock(kSpace1), {PhasePoint::zero(1)});
  CHECK(span.gram.rows() == 1);
  CHECK(std::abs(span.gram(0, 0) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(span.null_basis.cols() == 0);
}

TEST_CASE("gram spectrum export") {
  const auto span = gns_build(GeneratingFunction::dirac_g0(kSpace1),
                              {PhasePoint::zero(1), pt1(0, 1), pt1(1, 0)});
  std::ostringstream csv;
  write_gram_spectrum_csv(csv, span);
  CHECK(csv.str().rfind("index,eigenvalue,below_null_threshold\n", 0) == 0);

  const auto j = gram_spectrum_to_json(span);
  CHECK(j["points"] == 3);
  CHECK(j["rank"] == span.rank());
  CHECK(j["eigenvalues"].size() == 3);
}

TEST_CASE("indefinite gram is rejected with a diagnostic") {
  const GeneratingFunction one =
      GeneratingFunction::custom(kSpace1, [](const PhasePoint&) { return cplx(1.0, 0.0); });
  const PhasePoint y({Rational(355, 113)}, {Rational(0)});
  CHECK_THROWS_AS(gns_build(one, {PhasePoint::zero(1), y, pt1(0, 1)}), std::runtime_error);
}

TEST_CASE("fixpoint residual") {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);
  CHECK(gns_fixpoint_residual(g0, PhasePoint({Rational(0)}, {Rational(7, 3)})) == 0.0);
  CHECK(gns_fixpoint_residual(g0, pt1(1, 0)) == 2.0);

  const GeneratingFunction fock = GeneratingFunction::fock(kSpace1);
  CHECK(gns_fixpoint_residual(fock, pt1(2, 0)) ==
        doctest::Approx(1.2642411176571153).epsilon(1e-15));  // 2 - 2/e at ||y||^2 = 4

  // Residual vanishes exactly when g(y) = 1.
  SubstreamRng rng(41, 0);
  for (int i = 0; i < 40; ++i) {
    const PhasePoint y = rng.phase_point(1);
    for (const auto& g : {g0, fock}) {
      const bool res_zero = std::abs(gns_fixpoint_residual(g, y)) < 1e-12;
      const bool g_one = std::abs(g(y) - cplx(1.0, 0.0)) < 1e-12;
      CHECK(res_zero == g_one);
    }
  }
}

TEST_CASE("residual equals the quadratic evaluation") {
  SubstreamRng rng(42, 0);
  const auto space = SymplecticSpace::standard_pairs(2);
  const GeneratingFunction g = GeneratingFunction::quasifree(space, 2.0);
  for (int i = 0; i < 20; ++i) {
    const PhasePoint y = rng.phase_point(2);
    const WeylElement ty = WeylElement::generator(space, y) - WeylElement::unit(space);
    CHECK(std::abs(evaluate_state(g, weyl_mul(adjoint(ty), ty)) -
                   cplx(gns_fixpoint_residual(g, y), 0.0)) < 1e-12);
  }
}

TEST_CASE("orthogonality scan separates first-block classes") {
  const GeneratingFunction g0 = GeneratingFunction::dirac_g0(kSpace1);

  SUBCASE("three classes give three orthonormal vectors") {
    const auto span = gns_build(g0, {pt1(0, 0), pt1(1, 0), pt1(2, 0)});
    const auto scan = gns_orthogonality_scan(span);
    CHECK(scan.class_count == 3);
    CHECK(scan.max_cross_class == 0.0);
    CHECK(span.rank() == 3);
  }

  SUBCASE("same class stays unimodular") {
    const auto span = gns_build(g0, {pt1(1, 0), pt1(1, 5)});
    const auto scan = gns_orthogonality_scan(span);
    CHECK(scan.class_count == 1);
    CHECK(scan.max_within_modulus_dev < 1e-12);
    CHECK(span.rank() == 1);
  }

  SUBCASE("rank equals the class count on random spans") {
    SubstreamRng rng(43, 0);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<PhasePoint> pts;
      std::set<Rational> blocks;
      for (int c = 0; c < 5; ++c) {
        const Rational b = rng.rational(5, 2);
        blocks.insert(b);
        for (int r = 0; r < 1 + rep % 3; ++r)
          pts.push_back(PhasePoint({b}, {rng.rational()}));
      }
      const auto span = gns_build(g0, pts);
      CHECK(span.rank() == blocks.size());
      CHECK(gns_orthogonality_scan(span).max_cross_class < 1e-12);
    }
  }

  SUBCASE("only the constraint state is scanned") {
    const auto span = gns_build(GeneratingFunction::fock(kSpace1), {pt1(0, 0), pt1(1, 0)});
    CHECK_THROWS_AS(gns_orthogonality_scan(span), std::invalid_argument);
  }
}

TEST_CASE("gram agrees with the positivity kernel") {
  SubstreamRng rng(44, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 1 + rep % 3;
    const auto space = SymplecticSpace::standard_pairs(n);
    const GeneratingFunction g = rep % 2 == 0 ? GeneratingFunction::fock(space)
                                              : GeneratingFunction::dirac_g0(space);
    std::vector<PhasePoint> pts;
    for (int j = 0; j < 6; ++j) pts.push_back(rng.phase_point(n, 4, 3));
    const auto span = gns_build(g, pts);
    const auto kern = kernel_matrix(g, pts);
    for (Eigen::Index j = 0; j < kern.rows(); ++j)
      for (Eigen::Index k = 0; k < kern.cols(); ++k)
        CHECK(std::abs(span.gram(j, k) - std::conj(kern(k, j))) < 1e-14);
  }
}
