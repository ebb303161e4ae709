#ifndef WEYL_GNS_HPP
#define WEYL_GNS_HPP

#include <iosfwd>

#include "weyl/state_checks.hpp"

#include "json.hpp"

namespace weyl {

// Finite-span GNS geometry for a state given by g: the Gram matrix
//   G_jk = omega(W(x_j)* W(x_k)) = e^{-i beta(x_j, x_k)} g(x_k - x_j)
// together with its spectrum and numerical null space. Null vectors are the
// coefficient vectors of elements annihilated in the GNS quotient.
struct GnsSpan {
  GeneratingFunction g;
  std::vector<PhasePoint> points;
  Eigen::MatrixXcd gram;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd null_basis;   // orthonormal columns, eigenvalue < threshold
  double null_threshold = 0.0;   // absolute threshold actually applied

  std::size_t rank() const;
};

// Builds the span. The null threshold is tol relative to the largest
// eigenvalue; a Gram matrix indefinite beyond that tolerance is rejected.
GnsSpan gns_build(const GeneratingFunction& g, const std::vector<PhasePoint>& points,
                  double tol = 1e-9);

// ||pi(W(y)) Omega - Omega||^2 = 2 - 2 Re g(y); zero iff g(y) = 1.
double gns_fixpoint_residual(const GeneratingFunction& g, const PhasePoint& y);

struct OrthogonalityScan {
  std::size_t class_count = 0;        // distinct first blocks
  double max_cross_class = 0.0;       // largest |G_jk| across classes
  double max_within_modulus_dev = 0.0;  // largest ||G_jk| - 1| within a class
};

// For the constraint state g0 the span splits into classes by first block:
// Gram entries across classes vanish and have modulus one within a class,
// which is the finite-scale trace of the non-separability mechanism.
OrthogonalityScan gns_orthogonality_scan(const GnsSpan& span);

// Gram spectrum export: ascending eigenvalues with the applied null threshold.
void write_gram_spectrum_csv(std::ostream& out, const GnsSpan& span);
nlohmann::ordered_json gram_spectrum_to_json(const GnsSpan& span);

}  // namespace weyl

#endif  // WEYL_GNS_HPP
