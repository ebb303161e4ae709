#ifndef WEYL_TEST_HELPERS_HPP
#define WEYL_TEST_HELPERS_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "weyl/rng.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl::test {

inline cplx random_coeff(SubstreamRng& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

inline WeylElement random_element(SubstreamRng& rng, const SymplecticSpace& space,
                                  std::size_t terms) {
  WeylElement a(space);
  for (std::size_t t = 0; t < terms; ++t)
    a.add_term(rng.phase_point(space.n), random_coeff(rng));
  return a;
}

// Reference twisted product over plain term lists, kept independent of the
// WeylElement accumulation path.
using TermList = std::vector<std::pair<PhasePoint, cplx>>;

inline TermList to_terms(const WeylElement& a) {
  return {a.terms().begin(), a.terms().end()};
}

inline TermList naive_product(const SymplecticSpace& space, const TermList& a,
                              const TermList& b) {
  TermList out;
  for (const auto& [y, cy] : a) {
    for (const auto& [z, cz] : b) {
      const cplx coeff = cy * cz * std::polar(1.0, twist_angle(space, y, z));
      const PhasePoint sum = y + z;
      bool merged = false;
      for (auto& [p, c] : out) {
        if (p == sum) {
          c += coeff;
          merged = true;
          break;
        }
      }
      if (!merged) out.emplace_back(sum, coeff);
    }
  }
  return out;
}

inline double max_term_deviation(const TermList& ref, const WeylElement& got) {
  double dev = 0.0;
  for (const auto& [p, c] : ref) dev = std::max(dev, std::abs(c - got.coefficient(p)));
  return dev;
}

}  // namespace weyl::test

#endif  // WEYL_TEST_HELPERS_HPP
