#ifndef WEYL_MEASURES_HPP
#define WEYL_MEASURES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

#include "weyl/rational.hpp"

#include "json.hpp"

namespace weyl {

// Finite weighted sum of point masses on R^d. Complex weights are allowed;
// probability measures additionally have nonnegative weights summing to 1.
struct AtomicMeasure {
  struct Atom {
    Eigen::VectorXd x;
    cplx w;
  };

  std::size_t d = 0;
  std::vector<Atom> atoms;

  AtomicMeasure() = default;
  explicit AtomicMeasure(std::size_t dim) : d(dim) {}

  static AtomicMeasure delta0(std::size_t dim);

  void add_atom(Eigen::VectorXd x, cplx w);

  cplx total_mass() const;
  double total_variation() const;
  bool is_probability(double tol = 1e-12) const;

  // Weight sitting exactly at the given location (bitwise comparison; atom
  // locations are expected to be exact doubles).
  cplx weight_at(const Eigen::VectorXd& x) const;

  // Merges atoms at exactly equal locations and drops exact zeros.
  AtomicMeasure consolidated() const;
};

// Product split S = K x L with d1 and d2 coordinates. The dual splits as
// L-perp x K-perp with the same block sizes and the standard pairing per
// block: u = (u1, u2) acts on phi = (phi1, phi2) by <u1,phi1> + <u2,phi2>.
struct SplitSpace {
  std::size_t d1 = 1;
  std::size_t d2 = 1;

  std::size_t dim() const { return d1 + d2; }
  Eigen::VectorXd k_block(const Eigen::VectorXd& x) const { return x.head(d1); }
  Eigen::VectorXd l_block(const Eigen::VectorXd& x) const { return x.tail(d2); }
  Eigen::VectorXd join(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
};

// Mean-zero Gaussian law on R^d given by its covariance matrix.
struct GaussianSpec {
  Eigen::MatrixXd covariance;

  explicit GaussianSpec(Eigen::MatrixXd sigma);
  std::size_t dim() const { return static_cast<std::size_t>(covariance.rows()); }

  // Characteristic value E e^{i<u,phi>} = exp(-phi' Sigma phi / 2).
  double characteristic(const Eigen::VectorXd& phi) const;
};

// Transform of a measure on the primal space: sum w_j e^{-i<u, x_j>}.
cplx fourier_atomic(const AtomicMeasure& mu, const Eigen::VectorXd& u);

// Co-transform of a measure on the dual space: sum w_j e^{+i<u_j, phi>}.
cplx cofourier_atomic(const AtomicMeasure& nu, const Eigen::VectorXd& phi);

// Transform of a dual-space measure, i.e. the co-transform at -phi.
cplx fourier_dual_atomic(const AtomicMeasure& nu, const Eigen::VectorXd& phi);

// |<F mu, nu> - <mu, F nu>|; vanishes identically by finite Fubini.
double duality_check(const AtomicMeasure& mu, const AtomicMeasure& nu);

// f . mu: atoms reweighted by f at their locations.
AtomicMeasure multiply_function_measure(const std::function<cplx(const Eigen::VectorXd&)>& f,
                                        const AtomicMeasure& mu);

// (f * rho)(u) = sum w_j f(u - v_j).
cplx convolve_function_measure(const std::function<cplx(const Eigen::VectorXd&)>& f,
                               const AtomicMeasure& rho, const Eigen::VectorXd& u);

// mu * nu: atoms at pairwise sums with multiplied weights. The transform is
// an algebra homomorphism: F(mu * nu) = F mu . F nu.
AtomicMeasure convolve_measures(const AtomicMeasure& mu, const AtomicMeasure& nu);

AtomicMeasure product_measure(const AtomicMeasure& mu1, const AtomicMeasure& mu2);

// Checks 1_L . (mu1 x mu2) = mu1({0}) (delta_0 x mu2) atomwise; returns the
// largest atom-weight discrepancy (exactly 0 for exact atom locations).
double product_lemma_check(const SplitSpace& split, const AtomicMeasure& mu1,
                           const AtomicMeasure& mu2);

// For mu = delta_0 x mu2: transform of (1_L . mu) at (u1, u2) equals the
// transform of mu2 at u2. Max deviation over the dual samples.
double identity21_check(const SplitSpace& split, const AtomicMeasure& mu2,
                        const std::vector<Eigen::VectorXd>& dual_samples);

// ||rho|| . F(1_L . mu) = (1_{L-perp} . rho) * (F mu) for rho = rho1 x delta_0
// with rho1 positive on the L-perp block and mu = delta_0 x mu2. Max
// deviation over the dual samples.
double identity23_check(const SplitSpace& split, const AtomicMeasure& mu2,
                        const AtomicMeasure& rho1,
                        const std::vector<Eigen::VectorXd>& dual_samples);

struct BochnerResult {
  double lhs = 0.0;  // integral of F phi over the span of the chosen axes
  double rhs = 0.0;  // (2 pi)^{dim L0} times the integral of phi over the rest
  double relative_deviation = 0.0;
};

// Finite-dimensional transform identity for subspace surface measures,
// paired against a centered axis-aligned Gaussian phi(x) = exp(-1/2 sum a_i x_i^2):
// integrates F phi over the span of the chosen axes and phi over the
// complementary axes, expecting a (2 pi)^{dim L0} ratio. Both sides are
// evaluated by one-dimensional quadrature per axis.
BochnerResult finite_bochner_check(std::size_t d, const std::vector<std::size_t>& l0_axes,
                                   const Eigen::VectorXd& gaussian_diag);

struct McEstimate {
  cplx estimate;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

// Monte-Carlo mean of e^{i<u,phi>} with u ~ N(0, Sigma); target is
// spec.characteristic(phi).
McEstimate gaussian_mc_functional(const GaussianSpec& spec, const Eigen::VectorXd& phi,
                                  std::size_t samples, std::uint64_t seed);

// Monte-Carlo mean of <u,phi><u,psi>; target is phi' Sigma psi.
McEstimate gaussian_mc_moment(const GaussianSpec& spec, const Eigen::VectorXd& phi,
                              const Eigen::VectorXd& psi, std::size_t samples,
                              std::uint64_t seed);

struct ProductFormRow {
  cplx estimate;
  double stderr_ = 0.0;
  double target = 0.0;
  double sigmas = 0.0;  // |estimate - target| / stderr
};

// Independent sampling of the two factors; the estimate must match the
// product of the closed-form factors within the MC error.
std::vector<ProductFormRow> product_form_check(
    const GaussianSpec& spec1, const GaussianSpec& spec2,
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& phi_pairs,
    std::size_t samples, std::uint64_t seed);

nlohmann::ordered_json to_json(const AtomicMeasure& mu);
AtomicMeasure atomic_measure_from_json(const nlohmann::json& j);

// MC run report: {target, estimate, stderr, samples, seed}.
nlohmann::ordered_json mc_report_json(const McEstimate& est, double target,
                                      std::uint64_t seed);

}  // namespace weyl

#endif  // WEYL_MEASURES_HPP
