#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"
#include "kerov/measure.hpp"
#include "kerov/zigzag.hpp"

namespace kerov {

/// Cauchy transform of a zigzag, the rational function
///   G(z) = prod_j (z - y_j) / prod_i (z - x_i).
/// Exact over rational points; throws pole_error at the concave corners.
template <class T>
Cx<T> cauchy_transform(const Zigzag<T>& zz, const Cx<T>& point) {
  Cx<T> num(T(1), T(0));
  Cx<T> den(T(1), T(0));
  for (const T& y : zz.convex()) num = num * (point - Cx<T>(y));
  for (const T& x : zz.concave()) {
    Cx<T> f = point - Cx<T>(x);
    if (f.is_zero()) throw pole_error("Cauchy transform evaluated at a concave corner");
    den = den * f;
  }
  return num / den;
}

/// Transition measure of a zigzag: atoms at the concave corners with the
/// residue weights
///   p_i = prod_j (x_i - y_j) / prod_{k != i} (x_i - x_k),
/// computed by the product formula so rational corners stay exact. Rational
/// corners are cleared to a common denominator first; the scale cancels
/// between the two equally long products, and integer products need only a
/// single normalization per atom.
template <class T>
AtomicMeasure<T> transition_measure(const Zigzag<T>& zz) {
  const auto& xs = zz.concave();
  const auto& ys = zz.convex();
  std::vector<MassAtom<T>> atoms;
  atoms.reserve(xs.size());
  if constexpr (std::is_same_v<T, Rational>) {
    Integer common(1);
    for (const auto& x : xs) common = lcm(common, denominator(x));
    for (const auto& y : ys) common = lcm(common, denominator(y));
    std::vector<Integer> ix, iy;
    for (const auto& x : xs) ix.push_back(numerator(x) * (common / denominator(x)));
    for (const auto& y : ys) iy.push_back(numerator(y) * (common / denominator(y)));
    for (std::size_t i = 0; i < ix.size(); ++i) {
      Integer num(1), den(1);
      for (const Integer& y : iy) num *= ix[i] - y;
      for (std::size_t k = 0; k < ix.size(); ++k)
        if (k != i) den *= ix[i] - ix[k];
      if (den < 0) {
        num = -num;
        den = -den;
      }
      atoms.push_back({xs[i], Rational(num, den)});
    }
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      T num = T(1);
      T den = T(1);
      for (const T& y : ys) num *= xs[i] - y;
      for (std::size_t k = 0; k < xs.size(); ++k)
        if (k != i) den *= xs[i] - xs[k];
      atoms.push_back({xs[i], num / den});
    }
  }
  return AtomicMeasure<T>(std::move(atoms));
}

/// Transition measure of the staircase with N steps: atoms at 2k - N with
/// weight 2^(-2N) C(2k, k) C(2N-2k, N-k), k = 0..N.
inline AtomicMeasure<Rational> feller_measure(int N) {
  if (N < 1) throw std::invalid_argument("feller_measure needs N >= 1");
  const Integer denom = Integer(1) << (2 * N);
  std::vector<MassAtom<Rational>> atoms;
  atoms.reserve(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    Integer num = binomial(2 * static_cast<unsigned>(k), static_cast<unsigned>(k)) *
                  binomial(2 * static_cast<unsigned>(N - k), static_cast<unsigned>(N - k));
    atoms.push_back({Rational(2 * k - N), Rational(num, denom)});
  }
  return AtomicMeasure<Rational>(std::move(atoms));
}

/// Cumulative function of the arcsine law on [-sqrt(2), sqrt(2)], the
/// transition measure of the triangle diagram.
inline double arcsine_cdf(double t) {
  const double r = std::sqrt(2.0);
  if (t <= -r) return 0.0;
  if (t >= r) return 1.0;
  return 0.5 + std::asin(t / r) / M_PI;
}

/// Density 1 / (pi sqrt(2 - z^2)) of the arcsine law; zero outside.
inline double arcsine_density(double z) {
  if (z <= -std::sqrt(2.0) || z >= std::sqrt(2.0)) return 0.0;
  return 1.0 / (M_PI * std::sqrt(2.0 - z * z));
}

/// log[z G(z)] for an arbitrary continual diagram, off the real axis:
///   -sum_k sigma'_k (log(z - w_k) - log(z - w_{k+1}))
/// where sigma(w) = (omega(w) - |w|) / 2 and sigma' is constant on segments
/// split at w = 0. With Im z != 0 the principal logarithm never crosses its
/// branch cut along a real segment.
inline std::complex<double> log_cauchy(const Diagram& d, std::complex<double> z) {
  if (z.imag() == 0.0) throw std::invalid_argument("log_cauchy needs Im z != 0");
  const auto& pts = d.breakpoints();
  std::complex<double> acc = 0.0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    double u0 = pts[k - 1].u, v0 = pts[k - 1].v;
    double u1 = pts[k].u, v1 = pts[k].v;
    double slope = (v1 - v0) / (u1 - u0);
    // Split at w = 0 so sign(w) is constant on each piece.
    double cut[3] = {u0, std::min(std::max(0.0, u0), u1), u1};
    for (int piece = 0; piece < 2; ++piece) {
      double a = cut[piece], b = cut[piece + 1];
      if (!(a < b)) continue;
      double sign = (a + b) / 2 >= 0.0 ? 1.0 : -1.0;
      double sp = (slope - sign) / 2;  // sigma' on this piece
      if (sp == 0.0) continue;
      acc -= sp * (std::log(z - a) - std::log(z - b));
    }
  }
  return acc;
}

/// Poisson-smoothed density -Im G(x + i eta) / pi obtained from log_cauchy.
/// eta is caller-chosen; this is a validation and plotting aid, not the CDF
/// evaluation path for continual diagrams.
inline double stieltjes_density(const Diagram& d, double x, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("stieltjes_density needs eta > 0");
  std::complex<double> z(x, eta);
  std::complex<double> g = std::exp(log_cauchy(d, z)) / z;
  return -g.imag() / M_PI;
}

}  // namespace kerov
