#include "weyl/generating_function.hpp"

#include <cmath>
#include <stdexcept>

#include "weyl/rng.hpp"

namespace weyl {

namespace {

Rational block_norm_sq(const std::vector<Rational>& block) {
  Rational s(0);
  for (const auto& c : block) s += c * c;
  return s;
}

void require_pairs(const SymplecticSpace& space, const char* who) {
  if (space.kind != SymplecticSpace::Kind::StandardPairs)
    throw std::invalid_argument(std::string(who) + ": requires a StandardPairs space");
}

}  // namespace

GeneratingFunction GeneratingFunction::dirac_g0(const SymplecticSpace& space) {
  require_pairs(space, "GeneratingFunction::dirac_g0");
  return GeneratingFunction(Variant::DiracG0, space, 1.0, nullptr);
}

GeneratingFunction GeneratingFunction::quasifree(const SymplecticSpace& space, double l) {
  require_pairs(space, "GeneratingFunction::quasifree");
  if (!(l > 0.0))
    throw std::invalid_argument("GeneratingFunction::quasifree: l must be positive");
  return GeneratingFunction(Variant::Quasifree, space, l, nullptr);
}

GeneratingFunction GeneratingFunction::fock(const SymplecticSpace& space) {
  require_pairs(space, "GeneratingFunction::fock");
  return GeneratingFunction(Variant::Fock, space, 1.0, nullptr);
}

GeneratingFunction GeneratingFunction::custom(const SymplecticSpace& space, Callback g,
                                              std::uint64_t check_seed) {
  if (!g) throw std::invalid_argument("GeneratingFunction::custom: null callback");
  GeneratingFunction gf(Variant::Custom, space, 1.0, std::move(g));

  // Construction-time spot checks; positivity of the induced kernel is not
  // decidable from samples and remains the caller's responsibility.
  const double tol = 1e-9;
  if (std::abs(gf(PhasePoint::zero(space.n)) - cplx(1.0, 0.0)) > tol)
    throw std::invalid_argument("GeneratingFunction::custom: g(0) != 1");
  SubstreamRng rng(check_seed, 0x67656e66ull);
  for (int k = 0; k < 100; ++k) {
    const PhasePoint z = rng.phase_point(space.n);
    const cplx v = gf(z);
    if (std::abs(v) > 1.0 + tol)
      throw std::invalid_argument("GeneratingFunction::custom: |g| exceeds 1 at a sample");
    if (std::abs(gf(-z) - std::conj(v)) > tol)
      throw std::invalid_argument("GeneratingFunction::custom: g(-z) != conj g(z) at a sample");
  }
  return gf;
}

cplx GeneratingFunction::operator()(const PhasePoint& z) const {
  space_.check_point(z);
  switch (variant_) {
    case Variant::DiracG0:
      return z.first_block_zero() ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    case Variant::Quasifree: {
      const double a = to_double(block_norm_sq(z.first));
      const double b = to_double(block_norm_sq(z.second));
      return cplx(std::exp(-l_ * l_ / 4.0 * a - b / (4.0 * l_ * l_)), 0.0);
    }
    case Variant::Fock:
      return cplx(std::exp(-to_double(z.norm_sq()) / 4.0), 0.0);
    case Variant::Custom:
      return callback_(z);
  }
  return {};
}

std::string GeneratingFunction::name() const {
  switch (variant_) {
    case Variant::DiracG0:
      return "dirac_g0";
    case Variant::Quasifree:
      return "quasifree(l=" + std::to_string(l_) + ")";
    case Variant::Fock:
      return "fock";
    case Variant::Custom:
      return "custom";
  }
  return {};
}

cplx evaluate_state(const GeneratingFunction& g, const WeylElement& a) {
  if (!(g.space() == a.space()))
    throw std::invalid_argument("evaluate_state: space mismatch");
  cplx acc(0.0, 0.0);
  for (const auto& [z, c] : a.terms()) acc += c * g(z);
  return acc;
}

}  // namespace weyl
