#include "weyl/gns.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weyl {

std::size_t GnsSpan::rank() const {
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues[i] >= null_threshold) ++r;
  return r;
}

GnsSpan gns_build(const GeneratingFunction& g, const std::vector<PhasePoint>& points,
                  double tol) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const double angle = -to_double(beta(g.space(), points[j], points[k]));
      gram(j, k) = std::polar(1.0, angle) * g(points[k] - points[j]);
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const Eigen::VectorXd evals = es.eigenvalues();
  const double scale = std::max(evals.size() ? evals.maxCoeff() : 0.0, 1e-300);
  const double threshold = tol * scale;

  if (evals.minCoeff() < -threshold) {
    std::ostringstream msg;
    msg << "gns_build: Gram matrix indefinite beyond tolerance (min eigenvalue "
        << evals.minCoeff() << ", threshold " << threshold << "); " << g.name()
        << " does not define a state on this span";
    throw std::runtime_error(msg.str());
  }

  Eigen::Index null_dim = 0;
  while (null_dim < evals.size() && evals[null_dim] < threshold) ++null_dim;

  GnsSpan span{g, points, std::move(gram), evals,
               es.eigenvectors().leftCols(null_dim), threshold};
  return span;
}

double gns_fixpoint_residual(const GeneratingFunction& g, const PhasePoint& y) {
  return 2.0 - 2.0 * g(y).real();
}

OrthogonalityScan gns_orthogonality_scan(const GnsSpan& span) {
  if (span.g.variant() != GeneratingFunction::Variant::DiracG0)
    throw std::invalid_argument("gns_orthogonality_scan: defined for the dirac_g0 state");

  std::set<std::vector<Rational>> classes;
  for (const auto& p : span.points) classes.insert(p.first);

  OrthogonalityScan scan;
  scan.class_count = classes.size();
  const auto n = static_cast<Eigen::Index>(span.points.size());
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      if (j == k) continue;
      const double mod = std::abs(span.gram(j, k));
      if (span.points[j].first == span.points[k].first)
        scan.max_within_modulus_dev = std::max(scan.max_within_modulus_dev,
                                               std::abs(mod - 1.0));
      else
        scan.max_cross_class = std::max(scan.max_cross_class, mod);
    }
  return scan;
}

void write_gram_spectrum_csv(std::ostream& out, const GnsSpan& span) {
  out << "index,eigenvalue,below_null_threshold\n";
  out.precision(17);
  for (Eigen::Index i = 0; i < span.eigenvalues.size(); ++i)
    out << i << ',' << span.eigenvalues[i] << ','
        << (span.eigenvalues[i] < span.null_threshold ? 1 : 0) << '\n';
}

nlohmann::ordered_json gram_spectrum_to_json(const GnsSpan& span) {
  nlohmann::ordered_json j;
  j["state"] = span.g.name();
  j["points"] = span.points.size();
  j["null_threshold"] = span.null_threshold;
  j["rank"] = span.rank();
  j["eigenvalues"] =
      std::vector<double>(span.eigenvalues.data(),
                          span.eigenvalues.data() + span.eigenvalues.size());
  return j;
}

}  // namespace weyl
