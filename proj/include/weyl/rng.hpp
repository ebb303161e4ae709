#ifndef WEYL_RNG_HPP
#define WEYL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "weyl/phase_point.hpp"

namespace weyl {

// Seedable generator with named substreams: stream k of seed s is an
// mt19937_64 seeded by splitmix64 mixing of (s, k). Uniform and normal
// variates are produced from raw 64-bit draws rather than the standard
// distributions, whose algorithms are implementation-defined.
class SubstreamRng {
 public:
  SubstreamRng(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix(mix(seed ^ 0x9e3779b97f4a7c15ull) + stream)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1) with 53 significant bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  long uniform_int(long lo, long hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
  }

  // Box-Muller with a cached spare.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Rational rational(long num_range = 8, long den_range = 8) {
    return Rational(uniform_int(-num_range, num_range), uniform_int(1, den_range));
  }

  PhasePoint phase_point(std::size_t n, long num_range = 8, long den_range = 8) {
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < n; ++i) a.push_back(rational(num_range, den_range));
    for (std::size_t i = 0; i < n; ++i) b.push_back(rational(num_range, den_range));
    return PhasePoint(std::move(a), std::move(b));
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace weyl

#endif  // WEYL_RNG_HPP
