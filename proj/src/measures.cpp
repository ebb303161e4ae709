#include "weyl/measures.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "weyl/rng.hpp"

namespace weyl {

AtomicMeasure AtomicMeasure::delta0(std::size_t dim) {
  AtomicMeasure m(dim);
  m.add_atom(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim)), cplx(1.0, 0.0));
  return m;
}

void AtomicMeasure::add_atom(Eigen::VectorXd x, cplx w) {
  if (static_cast<std::size_t>(x.size()) != d)
    throw std::invalid_argument("AtomicMeasure: atom dimension mismatch");
  atoms.push_back({std::move(x), w});
}

cplx AtomicMeasure::total_mass() const {
  cplx s(0.0, 0.0);
  for (const auto& a : atoms) s += a.w;
  return s;
}

double AtomicMeasure::total_variation() const {
  double s = 0.0;
  for (const auto& a : atoms) s += std::abs(a.w);
  return s;
}

bool AtomicMeasure::is_probability(double tol) const {
  for (const auto& a : atoms)
    if (std::abs(a.w.imag()) > tol || a.w.real() < -tol) return false;
  return std::abs(total_mass() - cplx(1.0, 0.0)) <= tol;
}

namespace {

std::vector<double> key_of(const Eigen::VectorXd& x) {
  return {x.data(), x.data() + x.size()};
}

}  // namespace

cplx AtomicMeasure::weight_at(const Eigen::VectorXd& x) const {
  cplx s(0.0, 0.0);
  for (const auto& a : atoms)
    if (a.x == x) s += a.w;
  return s;
}

AtomicMeasure AtomicMeasure::consolidated() const {
  std::map<std::vector<double>, Atom> merged;
  for (const auto& a : atoms) {
    auto [it, inserted] = merged.emplace(key_of(a.x), a);
    if (!inserted) it->second.w += a.w;
  }
  AtomicMeasure out(d);
  for (auto& [k, a] : merged)
    if (a.w != cplx(0.0, 0.0)) out.atoms.push_back(std::move(a));
  return out;
}

Eigen::VectorXd SplitSpace::join(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  if (static_cast<std::size_t>(a.size()) != d1 || static_cast<std::size_t>(b.size()) != d2)
    throw std::invalid_argument("SplitSpace::join: block dimension mismatch");
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim()));
  v << a, b;
  return v;
}

GaussianSpec::GaussianSpec(Eigen::MatrixXd sigma) : covariance(std::move(sigma)) {
  if (covariance.rows() != covariance.cols())
    throw std::invalid_argument("GaussianSpec: covariance must be square");
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("GaussianSpec: covariance must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(covariance, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-10 * scale)
    throw std::invalid_argument("GaussianSpec: covariance is not positive semidefinite");
}

double GaussianSpec::characteristic(const Eigen::VectorXd& phi) const {
  return std::exp(-0.5 * phi.dot(covariance * phi));
}

cplx fourier_atomic(const AtomicMeasure& mu, const Eigen::VectorXd& u) {
  if (static_cast<std::size_t>(u.size()) != mu.d)
    throw std::invalid_argument("fourier_atomic: dimension mismatch");
  cplx s(0.0, 0.0);
  for (const auto& a : mu.atoms) s += a.w * std::polar(1.0, -u.dot(a.x));
  return s;
}

cplx cofourier_atomic(const AtomicMeasure& nu, const Eigen::VectorXd& phi) {
  if (static_cast<std::size_t>(phi.size()) != nu.d)
    throw std::invalid_argument("cofourier_atomic: dimension mismatch");
  cplx s(0.0, 0.0);
  for (const auto& a : nu.atoms) s += a.w * std::polar(1.0, a.x.dot(phi));
  return s;
}

cplx fourier_dual_atomic(const AtomicMeasure& nu, const Eigen::VectorXd& phi) {
  return cofourier_atomic(nu, -phi);
}

double duality_check(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  if (mu.d != nu.d) throw std::invalid_argument("duality_check: dimension mismatch");
  cplx lhs(0.0, 0.0);
  for (const auto& a : nu.atoms) lhs += a.w * fourier_atomic(mu, a.x);
  cplx rhs(0.0, 0.0);
  for (const auto& a : mu.atoms) rhs += a.w * fourier_dual_atomic(nu, a.x);
  return std::abs(lhs - rhs);
}

AtomicMeasure multiply_function_measure(const std::function<cplx(const Eigen::VectorXd&)>& f,
                                        const AtomicMeasure& mu) {
  AtomicMeasure out(mu.d);
  for (const auto& a : mu.atoms) out.atoms.push_back({a.x, a.w * f(a.x)});
  return out;
}

cplx convolve_function_measure(const std::function<cplx(const Eigen::VectorXd&)>& f,
                               const AtomicMeasure& rho, const Eigen::VectorXd& u) {
  cplx s(0.0, 0.0);
  for (const auto& a : rho.atoms) s += a.w * f(u - a.x);
  return s;
}

AtomicMeasure convolve_measures(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  if (mu.d != nu.d) throw std::invalid_argument("convolve_measures: dimension mismatch");
  AtomicMeasure out(mu.d);
  for (const auto& a : mu.atoms)
    for (const auto& b : nu.atoms) out.atoms.push_back({a.x + b.x, a.w * b.w});
  return out;
}

AtomicMeasure product_measure(const AtomicMeasure& mu1, const AtomicMeasure& mu2) {
  AtomicMeasure out(mu1.d + mu2.d);
  for (const auto& a : mu1.atoms)
    for (const auto& b : mu2.atoms) {
      Eigen::VectorXd x(out.d);
      x << a.x, b.x;
      out.atoms.push_back({std::move(x), a.w * b.w});
    }
  return out;
}

namespace {

bool block_is_zero(const Eigen::VectorXd& v) { return (v.array() == 0.0).all(); }

// Indicator of the L factor inside K x L: first block exactly zero.
std::function<cplx(const Eigen::VectorXd&)> indicator_l(const SplitSpace& split) {
  return [split](const Eigen::VectorXd& x) {
    return block_is_zero(split.k_block(x)) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  };
}

double max_atom_difference(const AtomicMeasure& a, const AtomicMeasure& b) {
  std::map<std::vector<double>, cplx> weights;
  for (const auto& atom : a.consolidated().atoms) weights[key_of(atom.x)] += atom.w;
  for (const auto& atom : b.consolidated().atoms) weights[key_of(atom.x)] -= atom.w;
  double dev = 0.0;
  for (const auto& [k, w] : weights) dev = std::max(dev, std::abs(w));
  return dev;
}

}  // namespace

double product_lemma_check(const SplitSpace& split, const AtomicMeasure& mu1,
                           const AtomicMeasure& mu2) {
  if (mu1.d != split.d1 || mu2.d != split.d2)
    throw std::invalid_argument("product_lemma_check: factor dimensions do not match the split");
  const AtomicMeasure mu = product_measure(mu1, mu2);
  const AtomicMeasure lhs = multiply_function_measure(indicator_l(split), mu);

  const cplx w0 = mu1.weight_at(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(split.d1)));
  AtomicMeasure rhs = product_measure(AtomicMeasure::delta0(split.d1), mu2);
  for (auto& atom : rhs.atoms) atom.w *= w0;

  return max_atom_difference(lhs, rhs);
}

double identity21_check(const SplitSpace& split, const AtomicMeasure& mu2,
                        const std::vector<Eigen::VectorXd>& dual_samples) {
  if (mu2.d != split.d2)
    throw std::invalid_argument("identity21_check: mu2 must live on the L block");
  const AtomicMeasure mu = product_measure(AtomicMeasure::delta0(split.d1), mu2);
  const AtomicMeasure g0mu = multiply_function_measure(indicator_l(split), mu);
  double dev = 0.0;
  for (const auto& u : dual_samples) {
    if (static_cast<std::size_t>(u.size()) != split.dim())
      throw std::invalid_argument("identity21_check: dual sample has wrong dimension");
    const cplx lhs = fourier_atomic(g0mu, u);
    const cplx rhs = fourier_atomic(mu2, split.l_block(u));
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

double identity23_check(const SplitSpace& split, const AtomicMeasure& mu2,
                        const AtomicMeasure& rho1,
                        const std::vector<Eigen::VectorXd>& dual_samples) {
  if (mu2.d != split.d2 || rho1.d != split.d1)
    throw std::invalid_argument("identity23_check: block dimensions do not match the split");
  for (const auto& a : rho1.atoms)
    if (std::abs(a.w.imag()) > 0.0 || a.w.real() < 0.0)
      throw std::invalid_argument("identity23_check: rho1 must be a positive measure");

  const AtomicMeasure mu = product_measure(AtomicMeasure::delta0(split.d1), mu2);
  const AtomicMeasure g0mu = multiply_function_measure(indicator_l(split), mu);

  // rho = rho1 x delta_0 on the dual split L-perp x K-perp; 1_{L-perp} is the
  // indicator of a vanishing K-perp block.
  const AtomicMeasure rho = product_measure(rho1, AtomicMeasure::delta0(split.d2));
  const auto indicator_lperp = [&split](const Eigen::VectorXd& u) {
    return block_is_zero(split.l_block(u)) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  };
  const AtomicMeasure h0rho = multiply_function_measure(indicator_lperp, rho);
  const double rho_norm = rho.total_variation();

  const auto f_mu = [&mu](const Eigen::VectorXd& u) { return fourier_atomic(mu, u); };

  double dev = 0.0;
  for (const auto& u : dual_samples) {
    if (static_cast<std::size_t>(u.size()) != split.dim())
      throw std::invalid_argument("identity23_check: dual sample has wrong dimension");
    const cplx lhs = rho_norm * fourier_atomic(g0mu, u);
    const cplx rhs = convolve_function_measure(f_mu, h0rho, u);
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

namespace {

// Composite Simpson on [-half_width, half_width].
double simpson(const std::function<double(double)>& f, double half_width, std::size_t points) {
  if (points % 2 == 0) ++points;
  const double a = -half_width, b = half_width;
  const double h = (b - a) / static_cast<double>(points - 1);
  double s = f(a) + f(b);
  for (std::size_t j = 1; j + 1 < points; ++j)
    s += f(a + h * static_cast<double>(j)) * (j % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

BochnerResult finite_bochner_check(std::size_t d, const std::vector<std::size_t>& l0_axes,
                                   const Eigen::VectorXd& gaussian_diag) {
  if (static_cast<std::size_t>(gaussian_diag.size()) != d)
    throw std::invalid_argument("finite_bochner_check: diagonal length must equal d");
  for (Eigen::Index i = 0; i < gaussian_diag.size(); ++i)
    if (!(gaussian_diag[i] > 0.0))
      throw std::invalid_argument("finite_bochner_check: Gaussian diagonal must be positive");
  std::vector<bool> in_l0(d, false);
  for (auto ax : l0_axes) {
    if (ax >= d) throw std::invalid_argument("finite_bochner_check: axis out of range");
    in_l0[ax] = true;
  }

  // Everything factorizes over axes: phi_i(x) = exp(-a_i x^2 / 2) with
  // transform F phi_i(t) = sqrt(2 pi / a_i) exp(-t^2 / (2 a_i)). The
  // subspace pairings are one-dimensional quadratures per axis.
  const std::size_t quad_points = 4097;
  double lhs = 1.0;  // integral of F phi over the span of the chosen axes
  double rhs = 1.0;  // (2 pi)^{dim L0} times the integral of phi over the rest
  for (std::size_t i = 0; i < d; ++i) {
    const double a = gaussian_diag[static_cast<Eigen::Index>(i)];
    const auto phi = [a](double x) { return std::exp(-0.5 * a * x * x); };
    const auto fphi = [a](double t) {
      return std::sqrt(2.0 * std::numbers::pi / a) * std::exp(-t * t / (2.0 * a));
    };
    if (in_l0[i]) {
      lhs *= simpson(fphi, 14.0 * std::sqrt(a), quad_points);
      rhs *= 2.0 * std::numbers::pi * phi(0.0);
    } else {
      lhs *= fphi(0.0);
      rhs *= simpson(phi, 14.0 / std::sqrt(a), quad_points);
    }
  }
  return {lhs, rhs, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300)};
}

namespace {

Eigen::MatrixXd covariance_factor(const Eigen::MatrixXd& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
  Eigen::VectorXd evals = es.eigenvalues();
  for (Eigen::Index i = 0; i < evals.size(); ++i) evals[i] = std::sqrt(std::max(evals[i], 0.0));
  return es.eigenvectors() * evals.asDiagonal();
}

Eigen::VectorXd draw(const Eigen::MatrixXd& factor, SubstreamRng& rng) {
  Eigen::VectorXd gauss(factor.cols());
  for (Eigen::Index i = 0; i < gauss.size(); ++i) gauss[i] = rng.normal();
  return factor * gauss;
}

McEstimate reduce_complex_mean(const std::vector<cplx>& values) {
  McEstimate est;
  est.samples = values.size();
  cplx mean(0.0, 0.0);
  for (const auto& v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (const auto& v : values) var += std::norm(v - mean);
  if (values.size() > 1) var /= static_cast<double>(values.size() - 1);
  est.estimate = mean;
  est.stderr_ = std::sqrt(var / static_cast<double>(values.size()));
  return est;
}

}  // namespace

McEstimate gaussian_mc_functional(const GaussianSpec& spec, const Eigen::VectorXd& phi,
                                  std::size_t samples, std::uint64_t seed) {
  if (static_cast<std::size_t>(phi.size()) != spec.dim())
    throw std::invalid_argument("gaussian_mc_functional: dimension mismatch");
  if (samples < 2) throw std::invalid_argument("gaussian_mc_functional: too few samples");
  const Eigen::MatrixXd factor = covariance_factor(spec.covariance);
  SubstreamRng rng(seed, 0x6d632d66756e63ull);
  std::vector<cplx> values;
  values.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s)
    values.push_back(std::polar(1.0, draw(factor, rng).dot(phi)));
  return reduce_complex_mean(values);
}

McEstimate gaussian_mc_moment(const GaussianSpec& spec, const Eigen::VectorXd& phi,
                              const Eigen::VectorXd& psi, std::size_t samples,
                              std::uint64_t seed) {
  if (static_cast<std::size_t>(phi.size()) != spec.dim() ||
      static_cast<std::size_t>(psi.size()) != spec.dim())
    throw std::invalid_argument("gaussian_mc_moment: dimension mismatch");
  if (samples < 2) throw std::invalid_argument("gaussian_mc_moment: too few samples");
  const Eigen::MatrixXd factor = covariance_factor(spec.covariance);
  SubstreamRng rng(seed, 0x6d632d6d6f6d65ull);
  std::vector<cplx> values;
  values.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::VectorXd u = draw(factor, rng);
    values.emplace_back(u.dot(phi) * u.dot(psi), 0.0);
  }
  return reduce_complex_mean(values);
}

std::vector<ProductFormRow> product_form_check(
    const GaussianSpec& spec1, const GaussianSpec& spec2,
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& phi_pairs,
    std::size_t samples, std::uint64_t seed) {
  const Eigen::MatrixXd f1 = covariance_factor(spec1.covariance);
  const Eigen::MatrixXd f2 = covariance_factor(spec2.covariance);
  std::vector<ProductFormRow> rows;
  std::uint64_t stream = 0x70726f64756374ull;
  for (const auto& [phi1, phi2] : phi_pairs) {
    SubstreamRng rng1(seed, stream++);
    SubstreamRng rng2(seed, stream++);
    std::vector<cplx> values;
    values.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
      const double angle = draw(f1, rng1).dot(phi1) + draw(f2, rng2).dot(phi2);
      values.push_back(std::polar(1.0, angle));
    }
    ProductFormRow row;
    const McEstimate est = reduce_complex_mean(values);
    row.estimate = est.estimate;
    row.stderr_ = est.stderr_;
    row.target = spec1.characteristic(phi1) * spec2.characteristic(phi2);
    const double dev = std::abs(est.estimate - cplx(row.target, 0.0));
    row.sigmas = est.stderr_ > 0.0 ? dev / est.stderr_ : (dev > 0.0 ? 1e300 : 0.0);
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json to_json(const AtomicMeasure& mu) {
  nlohmann::ordered_json j;
  j["d"] = mu.d;
  auto atoms = nlohmann::ordered_json::array();
  for (const auto& a : mu.atoms) {
    nlohmann::ordered_json atom;
    atom["x"] = std::vector<double>(a.x.data(), a.x.data() + a.x.size());
    atom["re"] = a.w.real();
    atom["im"] = a.w.imag();
    atoms.push_back(std::move(atom));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

nlohmann::ordered_json mc_report_json(const McEstimate& est, double target,
                                      std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["target"] = target;
  j["estimate"] = {{"re", est.estimate.real()}, {"im", est.estimate.imag()}};
  j["stderr"] = est.stderr_;
  j["samples"] = est.samples;
  j["seed"] = seed;
  return j;
}

AtomicMeasure atomic_measure_from_json(const nlohmann::json& j) {
  AtomicMeasure mu(j.at("d").get<std::size_t>());
  for (const auto& atom : j.at("atoms")) {
    const auto xs = atom.at("x").get<std::vector<double>>();
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(xs.data(),
                                                          static_cast<Eigen::Index>(xs.size()));
    mu.add_atom(std::move(x), cplx(atom.at("re").get<double>(), atom.at("im").get<double>()));
  }
  return mu;
}

}  // namespace weyl
