#ifndef WEYL_GENERATING_FUNCTION_HPP
#define WEYL_GENERATING_FUNCTION_HPP

#include <functional>
#include <string>

#include "weyl/weyl_element.hpp"

namespace weyl {

// A candidate state on span{W(z)} given by its scalar generating function
// g(z) = omega(W(z)). Required of every g: g(0) = 1, |g| <= 1, and
// g(-z) = conj g(z). Built-in variants:
//   DiracG0      g0(z) = 1 if z1 = 0, else 0   (constraint state for {0} x Q)
//   Quasifree(l) g_l(z) = exp(-(l^2/4)||z1||^2 - (1/(4 l^2))||z2||^2)
//   Fock         g_1, written exp(-||z||^2/4)
//   Custom       caller-supplied callback, spot-checked at construction
class GeneratingFunction {
 public:
  enum class Variant { DiracG0, Quasifree, Fock, Custom };

  using Callback = std::function<cplx(const PhasePoint&)>;

  static GeneratingFunction dirac_g0(const SymplecticSpace& space);
  static GeneratingFunction quasifree(const SymplecticSpace& space, double l);
  static GeneratingFunction fock(const SymplecticSpace& space);
  // Spot-checks g(0) = 1, hermiticity, and |g| <= 1 on 100 random points.
  static GeneratingFunction custom(const SymplecticSpace& space, Callback g,
                                   std::uint64_t check_seed = 0);

  Variant variant() const { return variant_; }
  const SymplecticSpace& space() const { return space_; }
  double length_scale() const { return l_; }  // Quasifree/Fock only

  cplx operator()(const PhasePoint& z) const;

  std::string name() const;

 private:
  GeneratingFunction(Variant v, SymplecticSpace space, double l, Callback cb)
      : variant_(v), space_(std::move(space)), l_(l), callback_(std::move(cb)) {}

  Variant variant_;
  SymplecticSpace space_;
  double l_ = 1.0;
  Callback callback_;
};

// omega(A) = sum c_z g(z); linear in A and bounded by l1_norm(A).
cplx evaluate_state(const GeneratingFunction& g, const WeylElement& a);

}  // namespace weyl

#endif  // WEYL_GENERATING_FUNCTION_HPP
