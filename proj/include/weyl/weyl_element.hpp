#ifndef WEYL_WEYL_ELEMENT_HPP
#define WEYL_WEYL_ELEMENT_HPP

#include <map>
#include <string>

#include "weyl/symplectic.hpp"

#include "json.hpp"

namespace weyl {

// A finite sum sum_z c_z W(z) in the twisted group algebra. Support points
// are exact map keys; coefficients are complex doubles. Exact zeros are
// pruned so support comparisons are meaningful.
class WeylElement {
 public:
  using Terms = std::map<PhasePoint, cplx>;

  explicit WeylElement(SymplecticSpace space) : space_(std::move(space)) {}

  static WeylElement unit(const SymplecticSpace& space);
  static WeylElement generator(const SymplecticSpace& space, const PhasePoint& z);

  const SymplecticSpace& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }

  cplx coefficient(const PhasePoint& z) const {
    auto it = terms_.find(z);
    return it == terms_.end() ? cplx(0.0, 0.0) : it->second;
  }

  void add_term(const PhasePoint& z, cplx c);

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(cplx s);

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(cplx s, WeylElement a) { return a *= s; }

  // Drops terms with |c| <= tol; tol = 0 keeps everything but exact zeros.
  WeylElement pruned(double tol) const;

 private:
  SymplecticSpace space_;
  Terms terms_;
};

// Twisted product, bilinear extension of W(y) W(z) = e^{i beta(y,z)} W(y+z).
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

// Involution: (z -> c) maps to (-z -> conj c); implements W(-z) = W(z)*.
WeylElement adjoint(const WeylElement& a);

// sum |c_z|; dominates |omega(A)| for every state and is submultiplicative.
double l1_norm(const WeylElement& a);

// JSON form: {"space": {...}, "terms": [{"point": ["p/q", ...], "re": x, "im": y}]}.
nlohmann::ordered_json to_json(const WeylElement& a);
WeylElement weyl_element_from_json(const nlohmann::json& j);

}  // namespace weyl

#endif  // WEYL_WEYL_ELEMENT_HPP
