#include "weyl/weyl_element.hpp"

#include <cmath>
#include <stdexcept>

namespace weyl {

WeylElement WeylElement::unit(const SymplecticSpace& space) {
  WeylElement e(space);
  e.add_term(PhasePoint::zero(space.n), cplx(1.0, 0.0));
  return e;
}

WeylElement WeylElement::generator(const SymplecticSpace& space, const PhasePoint& z) {
  space.check_point(z);
  WeylElement e(space);
  e.add_term(z, cplx(1.0, 0.0));
  return e;
}

void WeylElement::add_term(const PhasePoint& z, cplx c) {
  space_.check_point(z);
  auto [it, inserted] = terms_.emplace(z, c);
  if (!inserted) it->second += c;
  if (it->second == cplx(0.0, 0.0)) terms_.erase(it);
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  if (!(space_ == other.space_))
    throw std::invalid_argument("WeylElement: space mismatch");
  for (const auto& [z, c] : other.terms_) add_term(z, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  if (!(space_ == other.space_))
    throw std::invalid_argument("WeylElement: space mismatch");
  for (const auto& [z, c] : other.terms_) add_term(z, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(cplx s) {
  if (s == cplx(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [z, c] : terms_) c *= s;
  return *this;
}

WeylElement WeylElement::pruned(double tol) const {
  WeylElement e(space_);
  for (const auto& [z, c] : terms_)
    if (std::abs(c) > tol) e.terms_.emplace(z, c);
  return e;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  if (!(a.space() == b.space()))
    throw std::invalid_argument("weyl_mul: space mismatch");
  WeylElement out(a.space());
  for (const auto& [y, cy] : a.terms()) {
    for (const auto& [z, cz] : b.terms()) {
      const double angle = twist_angle(a.space(), y, z);
      out.add_term(y + z, cy * cz * std::polar(1.0, angle));
    }
  }
  return out;
}

WeylElement adjoint(const WeylElement& a) {
  WeylElement out(a.space());
  for (const auto& [z, c] : a.terms()) out.add_term(-z, std::conj(c));
  return out;
}

double l1_norm(const WeylElement& a) {
  double s = 0.0;
  for (const auto& [z, c] : a.terms()) s += std::abs(c);
  return s;
}

nlohmann::ordered_json to_json(const WeylElement& a) {
  nlohmann::ordered_json j;
  j["space"]["kind"] =
      a.space().kind == SymplecticSpace::Kind::StandardPairs ? "standard_pairs" : "lattice_z2";
  j["space"]["n"] = a.space().n;
  if (a.space().kind == SymplecticSpace::Kind::LatticeZ2) j["space"]["theta"] = a.space().theta;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [z, c] : a.terms()) {
    nlohmann::ordered_json t;
    auto pt = nlohmann::ordered_json::array();
    for (const auto& r : z.first) pt.push_back(format_rational(r));
    for (const auto& r : z.second) pt.push_back(format_rational(r));
    t["point"] = std::move(pt);
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

WeylElement weyl_element_from_json(const nlohmann::json& j) {
  const auto& sp = j.at("space");
  const std::string kind = sp.at("kind").get<std::string>();
  SymplecticSpace space = kind == "lattice_z2"
                              ? SymplecticSpace::lattice_z2(sp.at("theta").get<double>())
                              : SymplecticSpace::standard_pairs(sp.at("n").get<std::size_t>());
  WeylElement e(space);
  for (const auto& t : j.at("terms")) {
    const auto& pt = t.at("point");
    if (pt.size() != 2 * space.n)
      throw std::invalid_argument("weyl_element_from_json: wrong point length");
    std::vector<Rational> z1, z2;
    for (std::size_t i = 0; i < space.n; ++i)
      z1.push_back(parse_rational(pt[i].get<std::string>()));
    for (std::size_t i = space.n; i < 2 * space.n; ++i)
      z2.push_back(parse_rational(pt[i].get<std::string>()));
    e.add_term(PhasePoint(std::move(z1), std::move(z2)),
               cplx(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return e;
}

}  // namespace weyl
