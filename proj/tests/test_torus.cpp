#include "doctest.h"

#include <cmath>

#include "test_helpers.hpp"
#include "weyl/torus.hpp"

using namespace weyl;
using namespace weyl::test;

namespace {

PhasePoint lat(long m1, long m2) { return PhasePoint({Rational(m1)}, {Rational(m2)}); }

}  // namespace

TEST_CASE("commutative case p = 0") {
  const TorusRep rep = torus_build(0, 3);
  CHECK(torus_relation_deviation(rep, 3) < 1e-15);
  const Eigen::MatrixXcd vm = torus_apply(rep, 1, 2);
  const Eigen::MatrixXcd vn = torus_apply(rep, 2, -1);
  CHECK((vm * vn - torus_apply(rep, 3, 1)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("p=1, q=2 product phase is i") {
  const TorusRep rep = torus_build(1, 2);
  // Frozen 2x2 matrices: clock = diag(1,-1), shift = [[0,1],[1,0]],
  // V(1,1) = e^{-i pi/2} clock shift = [[0,-i],[i,0]].
  Eigen::MatrixXcd v11(2, 2);
  v11 << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  CHECK((torus_apply(rep, 1, 1) - v11).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::MatrixXcd lhs = torus_apply(rep, 1, 0) * torus_apply(rep, 0, 1);
  const Eigen::MatrixXcd rhs = cplx(0.0, 1.0) * torus_apply(rep, 1, 1);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("V(q, 0) collapses to the identity") {
  for (long q : {2L, 3L, 5L}) {
    const TorusRep rep = torus_build(1, q);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(q, q);
    CHECK((torus_apply(rep, q, 0) - id).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((torus_apply(rep, 0, q) - id).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("generators are unitary and the relation holds on the window") {
  for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 5}}) {
    const TorusRep rep = torus_build(p, q);
    for (long m1 = -q; m1 <= q; ++m1)
      for (long m2 = -q; m2 <= q; ++m2) {
        const auto v = torus_apply(rep, m1, m2);
        CHECK((v.adjoint() * v - Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff() <
              1e-12);
      }
    CHECK(torus_relation_deviation(rep, q) < 1e-12);
  }
}

TEST_CASE("matrix representation matches the lattice algebra product") {
  const TorusRep rep = torus_build(2, 5);
  const auto lattice = SymplecticSpace::lattice_z2(rep.theta);
  SubstreamRng rng(21, 0);
  for (int i = 0; i < 20; ++i) {
    const long m1 = rng.uniform_int(-4, 4), m2 = rng.uniform_int(-4, 4);
    const long n1 = rng.uniform_int(-4, 4), n2 = rng.uniform_int(-4, 4);
    const WeylElement prod = weyl_mul(WeylElement::generator(lattice, lat(m1, m2)),
                                      WeylElement::generator(lattice, lat(n1, n2)));
    const cplx c = prod.coefficient(lat(m1 + n1, m2 + n2));
    const Eigen::MatrixXcd lhs = torus_apply(rep, m1, m2) * torus_apply(rep, n1, n2);
    const Eigen::MatrixXcd rhs = c * torus_apply(rep, m1 + n1, m2 + n2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("trace state") {
  const TorusRep rep = torus_build(1, 3);
  const auto lattice = SymplecticSpace::lattice_z2(rep.theta);

  CHECK(std::abs(torus_trace_state(rep, WeylElement::unit(lattice)) - cplx(1.0, 0.0)) <
        1e-15);
  CHECK(std::abs(torus_trace_state(rep, WeylElement::generator(lattice, lat(1, 0)))) < 1e-15);

  WeylElement e(lattice);
  e.add_term(lat(0, 0), cplx(3.0, 0.0));
  e.add_term(lat(1, 1), cplx(0.0, 2.0));
  CHECK(std::abs(torus_trace_state(rep, e) - cplx(3.0, 0.0)) < 1e-12);
}

TEST_CASE("trace rejects support outside the faithfulness window") {
  const TorusRep rep = torus_build(1, 3);
  const auto lattice = SymplecticSpace::lattice_z2(rep.theta);
  CHECK_THROWS_AS(torus_trace_state(rep, WeylElement::generator(lattice, lat(3, 0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(torus_trace_state(rep, WeylElement::generator(lattice, lat(0, -3))),
                  std::invalid_argument);

  // gcd(p, q) > 1 shrinks the m1 window: with p=2, q=4 the phase has order 2.
  const TorusRep rep24 = torus_build(2, 4);
  CHECK(rep24.faithful_m1_window() == 2);
  const auto lattice24 = SymplecticSpace::lattice_z2(rep24.theta);
  CHECK(std::abs(torus_trace_state(rep24, WeylElement::generator(lattice24, lat(1, 0)))) <
        1e-15);
  CHECK_THROWS_AS(torus_trace_state(rep24, WeylElement::generator(lattice24, lat(2, 0))),
                  std::invalid_argument);

  // p = 0 collapses the clock entirely.
  const TorusRep rep0 = torus_build(0, 4);
  CHECK(rep0.faithful_m1_window() == 1);
  const auto lattice0 = SymplecticSpace::lattice_z2(0.0);
  CHECK_THROWS_AS(torus_trace_state(rep0, WeylElement::generator(lattice0, lat(1, 0))),
                  std::invalid_argument);
}

TEST_CASE("builder rejects q = 0 and mismatched theta") {
  CHECK_THROWS_AS(torus_build(1, 0), std::invalid_argument);
  const TorusRep rep = torus_build(1, 3);
  const auto wrong = SymplecticSpace::lattice_z2(0.1);
  CHECK_THROWS_AS(torus_trace_state(rep, WeylElement::unit(wrong)), std::invalid_argument);
}
