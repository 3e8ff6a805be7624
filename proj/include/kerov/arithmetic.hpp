#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace kerov {

// Exact arithmetic used wherever corner coordinates are rational: residues,
// the hook-length oracle, Feller weights, shifted-diagram root scans.
// Floating point is used for genuinely continual data (triangle diagram,
// rescaled profiles, Stieltjes smoothing).
// et_off keeps every operator returning a materialized value, so the types
// compose with std::min/std::max and generic code shared with double.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }
inline double to_double(double x) { return x; }

// Thrown when a Cauchy transform is evaluated at one of its poles.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when an affine line fails to intersect a shifted profile.
struct no_intersection_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Complex numbers over an arbitrary ordered field. std::complex is only
/// specified for built-in floating types, and the exact residue identities
/// need complex points with rational coordinates.
template <class T>
struct Cx {
  T re{};
  T im{};

  Cx() = default;
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cx(T r) : re(std::move(r)), im(T(0)) {}

  bool is_zero() const { return re == T(0) && im == T(0); }

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    T d = b.re * b.re + b.im * b.im;
    if (d == T(0)) throw pole_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

}  // namespace kerov
