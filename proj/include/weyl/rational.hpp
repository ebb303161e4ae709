#ifndef WEYL_RATIONAL_HPP
#define WEYL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace weyl {

// Exact coordinate type. Support points, beta values and all bookkeeping on
// phase space stay in rational arithmetic; doubles enter only through the
// phases e^{i beta} and the Gaussian envelopes.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using cplx = std::complex<double>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Exact complex-rational scalar, used for the complex structure on phase
// space and for the constructed inner product.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

  ComplexRational conj() const { return {re, -im}; }
  cplx to_cplx() const { return {to_double(re), to_double(im)}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

}  // namespace weyl

#endif  // WEYL_RATIONAL_HPP
