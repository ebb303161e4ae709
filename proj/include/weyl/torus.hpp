#ifndef WEYL_TORUS_HPP
#define WEYL_TORUS_HPP

#include <Eigen/Dense>

#include "weyl/weyl_element.hpp"

namespace weyl {

// Clock-and-shift matrix representation of the deformed torus relations
//   V(m) V(n) = e^{i theta (m1 n2 - m2 n1)} V(m + n),   theta = pi p / q.
//
// clock = diag(1, w, ..., w^{q-1}) with w = e^{2 i theta}, shift the cyclic
// permutation e_k -> e_{k+1}, so clock*shift = e^{2 i theta} shift*clock, and
//   V(m) = e^{-i theta m1 m2} clock^{m1} shift^{m2}.
// The representation is not faithful: V is scalar exactly on the sublattice
// (q/gcd(p,q)) Z x q Z, which bounds the window where the trace state is
// reliable.
struct TorusRep {
  long p = 0;
  long q = 1;
  double theta = 0.0;
  Eigen::MatrixXcd clock;
  Eigen::MatrixXcd shift;

  // Largest |m1| window on which tr V(m1, .) vanishes for m1 != 0.
  long faithful_m1_window() const;
};

// Builds the representation and self-verifies unitarity and the commutation
// convention to 1e-12; a wrong convention is rejected at construction.
TorusRep torus_build(long p, long q);

// V(m) as above, with closed-form clock/shift powers (exact periodicity).
Eigen::MatrixXcd torus_apply(const TorusRep& rep, long m1, long m2);

// Normalized trace (1/q) tr of the represented element; equals the W(0,0)
// coefficient on the faithfulness window. Elements live on a LatticeZ2 space
// with matching theta; support outside the window is rejected.
cplx torus_trace_state(const TorusRep& rep, const WeylElement& element);

// Max deviation of the product relation over the index window |m_i|,|n_i| <= w.
double torus_relation_deviation(const TorusRep& rep, long window);

}  // namespace weyl

#endif  // WEYL_TORUS_HPP
