#include "weyl/torus.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace weyl {

namespace {

long mod_q(long a, long q) {
  long r = a % q;
  return r < 0 ? r + q : r;
}

}  // namespace

long TorusRep::faithful_m1_window() const {
  const long g = std::gcd(mod_q(p, q), q);  // p = 0 gives g = q
  return q / g;
}

TorusRep torus_build(long p, long q) {
  if (q < 1) throw std::invalid_argument("torus_build: q must be >= 1");
  TorusRep rep;
  rep.p = p;
  rep.q = q;
  rep.theta = std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);

  rep.clock = Eigen::MatrixXcd::Zero(q, q);
  rep.shift = Eigen::MatrixXcd::Zero(q, q);
  for (long k = 0; k < q; ++k) {
    rep.clock(k, k) = std::polar(1.0, 2.0 * rep.theta * static_cast<double>(k));
    rep.shift((k + 1) % q, k) = 1.0;
  }

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(q, q);
  const double tol = 1e-12;
  if ((rep.clock.adjoint() * rep.clock - id).cwiseAbs().maxCoeff() > tol ||
      (rep.shift.adjoint() * rep.shift - id).cwiseAbs().maxCoeff() > tol)
    throw std::runtime_error("torus_build: generators not unitary");

  // Convention check: clock*shift = e^{2 i theta} shift*clock.
  const cplx w = std::polar(1.0, 2.0 * rep.theta);
  if ((rep.clock * rep.shift - w * rep.shift * rep.clock).cwiseAbs().maxCoeff() > tol)
    throw std::runtime_error("torus_build: commutation convention violated");
  return rep;
}

Eigen::MatrixXcd torus_apply(const TorusRep& rep, long m1, long m2) {
  const long q = rep.q;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(q, q);
  // Every entry is an integer power of e^{i theta}, which has period 2q.
  // Reducing the exponent before the float multiply keeps mathematically
  // equal phases bit-identical across different index bookkeeping.
  for (long k = 0; k < q; ++k) {
    const long row = mod_q(k + m2, q);
    const long t = mod_q(2 * m1 * (k + m2) - m1 * m2, 2 * q);
    out(row, k) = std::polar(1.0, rep.theta * static_cast<double>(t));
  }
  return out;
}

cplx torus_trace_state(const TorusRep& rep, const WeylElement& element) {
  if (element.space().kind != SymplecticSpace::Kind::LatticeZ2)
    throw std::invalid_argument("torus_trace_state: element must live on a LatticeZ2 space");
  if (std::abs(element.space().theta - rep.theta) > 1e-15)
    throw std::invalid_argument("torus_trace_state: element theta does not match representation");

  const long w1 = rep.faithful_m1_window();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rep.q, rep.q);
  for (const auto& [z, c] : element.terms()) {
    const long m1 = z.first[0].convert_to<long>();
    const long m2 = z.second[0].convert_to<long>();
    if (std::abs(m1) >= w1 || std::abs(m2) >= rep.q)
      throw std::invalid_argument(
          "torus_trace_state: support index outside the faithfulness window (|m1| < " +
          std::to_string(w1) + ", |m2| < " + std::to_string(rep.q) + ")");
    acc += c * torus_apply(rep, m1, m2);
  }
  return acc.trace() / static_cast<double>(rep.q);
}

double torus_relation_deviation(const TorusRep& rep, long window) {
  double dev = 0.0;
  for (long m1 = -window; m1 <= window; ++m1)
    for (long m2 = -window; m2 <= window; ++m2) {
      const Eigen::MatrixXcd vm = torus_apply(rep, m1, m2);
      for (long n1 = -window; n1 <= window; ++n1)
        for (long n2 = -window; n2 <= window; ++n2) {
          const long t = mod_q(m1 * n2 - m2 * n1, 2 * rep.q);
          const cplx phase = std::polar(1.0, rep.theta * static_cast<double>(t));
          const double d = (vm * torus_apply(rep, n1, n2) -
                            phase * torus_apply(rep, m1 + n1, m2 + n2))
                               .cwiseAbs()
                               .maxCoeff();
          dev = std::max(dev, d);
        }
    }
  return dev;
}

}  // namespace weyl
