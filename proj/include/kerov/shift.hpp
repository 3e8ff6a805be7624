#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kerov/approximation.hpp"
#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"
#include "kerov/measure.hpp"
#include "kerov/transition.hpp"
#include "kerov/zigzag.hpp"

namespace kerov {

/// f(z) = z + b with b > 0; slope fixed at one (Russian coordinates, so the
/// graph is a horizontal line at height b/2 in French coordinates).
template <class T>
struct AffineLine {
  T intercept;

  explicit AffineLine(T b) : intercept(std::move(b)) {
    if (!(intercept > T(0))) throw std::invalid_argument("affine line needs intercept > 0");
  }

  T operator()(const T& z) const { return z + intercept; }
};

namespace detail {

// Weakly decreasing piecewise-linear function given by node values, with a
// strictly falling left tail and a right tail of slope right_slope <= 0.
// Root scans are deterministic segment walks so the "minimal"/"maximal"
// semantics are exact: a stretch that is identically zero yields its left
// endpoint for the minimal root and its right endpoint for the maximal one.
template <class T>
struct DecreasingPL {
  std::vector<T> z;
  std::vector<T> g;
  T left_slope;   // < 0
  T right_slope;  // <= 0

  T minimal_root() const {
    std::size_t n = z.size();
    std::size_t i = 0;
    while (i < n && g[i] > T(0)) ++i;
    if (i == n) {
      if (!(right_slope < T(0)) || !(g.back() > T(0)))
        throw no_intersection_error("decreasing function has no root");
      return z.back() - g.back() / right_slope;
    }
    if (i == 0) {
      if (g[0] == T(0)) return z[0];
      return z[0] - g[0] / left_slope;
    }
    if (g[i] == T(0)) return z[i];
    return z[i - 1] + g[i - 1] * (z[i] - z[i - 1]) / (g[i - 1] - g[i]);
  }

  // Empty when there is no root or the solution set is unbounded above.
  std::optional<T> maximal_root() const {
    std::size_t n = z.size();
    std::size_t j = n;
    while (j > 0 && g[j - 1] < T(0)) --j;
    if (j == 0) {
      // Everything negative: the falling left tail still crosses zero.
      return z[0] - g[0] / left_slope;
    }
    --j;  // last index with g[j] >= 0
    if (j + 1 == n) {
      if (right_slope < T(0)) return z.back() - g.back() / right_slope;
      return std::nullopt;  // flat tail: no root, or roots unbounded above
    }
    if (g[j] == T(0)) return z[j];
    return z[j] + g[j] * (z[j + 1] - z[j]) / (g[j] - g[j + 1]);
  }
};

}  // namespace detail

/// Intersection abscissas of the line with the shifted copies of Omega:
/// z_minus is the minimal solution of f(z) = Omega(z - eps) - eps and
/// z_plus the maximal solution of f(z) = Omega(z - eps) + eps.
/// Both differences are weakly decreasing piecewise-linear functions, so the
/// scans are exact; z_plus - z_minus >= eps always holds.
template <class T>
std::pair<T, T> intersections(const PiecewiseDiagram<T>& omega, const T& eps,
                              const AffineLine<T>& line) {
  if (!(eps > T(0))) throw std::invalid_argument("intersections needs eps > 0");
  const auto& pts = omega.breakpoints();
  detail::DecreasingPL<T> blue, red;
  blue.left_slope = red.left_slope = T(-2);
  blue.right_slope = red.right_slope = T(0);
  for (const auto& p : pts) {
    blue.z.push_back(p.u + eps);
    blue.g.push_back(p.v - p.u - eps - eps - line.intercept);
    red.z.push_back(p.u + eps);
    red.g.push_back(p.v - p.u - line.intercept);
  }
  T z_minus = blue.minimal_root();
  auto z_plus = red.maximal_root();
  if (!z_plus) throw no_intersection_error("line does not meet the raised profile");
  return {z_minus, *z_plus};
}

template <class T>
struct ShiftReport {
  T z_minus;
  T z_plus;
  PiecewiseDiagram<T> shifted;
  T epsilon;
  AffineLine<T> line;
};

/// The eps-shift of Omega along f: Omega(z-eps)-eps left of z_minus, the
/// line on [z_minus, z_plus], Omega(z-eps)+eps right of z_plus. Equals
/// min(max(Omega(z-eps)-eps, f(z)), Omega(z-eps)+eps) pointwise.
template <class T>
ShiftReport<T> shifted_diagram(const PiecewiseDiagram<T>& omega, const T& eps,
                               const AffineLine<T>& line) {
  auto [z_minus, z_plus] = intersections(omega, eps, line);
  const T tol = detail::merge_tolerance(T{});
  std::vector<BreakPoint<T>> pts;
  for (const auto& p : omega.breakpoints())
    if (p.u + eps < z_minus - tol) pts.push_back({p.u + eps, p.v - eps});
  pts.push_back({z_minus, line(z_minus)});
  pts.push_back({z_plus, line(z_plus)});
  for (const auto& p : omega.breakpoints())
    if (p.u + eps > z_plus + tol) pts.push_back({p.u + eps, p.v + eps});
  return ShiftReport<T>{z_minus, z_plus, PiecewiseDiagram<T>::from_breakpoints(std::move(pts)),
                        eps, line};
}

/// Tail-weight floor (z - z_plus) / (z + eps - z_plus) for z >= z_plus,
/// zero otherwise. Continuous, weakly increasing, valued in [0, 1).
template <class T>
T p_min(const T& z_plus, const T& eps, const T& z) {
  if (!(eps > T(0))) throw std::invalid_argument("p_min needs eps > 0");
  if (z < z_plus) return T(0);
  return (z - z_plus) / (z + eps - z_plus);
}

/// Corner bookkeeping of a shift of a zigzag: the index i with
/// y_i + eps < z_minus <= x_i + eps (y_0 = -infinity) and the index j with
/// y_j + eps <= z_plus < x_j + eps (j = 0 when z_plus precedes every
/// corner). Supplies the factor P with G_shifted(z) = G(z - eps) P(z) and
/// the corner-gap sum of the centering identity
/// z_plus - z_minus = eps + sum_{i <= k < j} (y_{k+1} - x_k).
template <class T>
struct ShiftStructure {
  std::size_t i = 0;
  std::size_t j = 0;
  T z_minus;
  T z_plus;
  T epsilon;
  std::vector<T> xs;
  std::vector<T> ys;

  template <class P>
  P product(const P& z) const {
    P val = (z - P(z_plus)) / (z - P(z_minus));
    for (std::size_t k = i; k < j; ++k)
      val = val * ((z - P(xs[k] + epsilon)) / (z - P(ys[k] + epsilon)));
    return val;
  }

  T corner_gap_sum() const {
    T s = T(0);
    for (std::size_t k = i; k < j; ++k) s += ys[k] - xs[k];
    return s;
  }
};

template <class T>
ShiftStructure<T> shift_structure(const Zigzag<T>& base, const T& eps, const T& z_minus,
                                  const T& z_plus) {
  ShiftStructure<T> out;
  out.z_minus = z_minus;
  out.z_plus = z_plus;
  out.epsilon = eps;
  out.xs = base.concave();
  out.ys = base.convex();
  while (out.i < out.xs.size() && out.xs[out.i] + eps < z_minus) ++out.i;
  while (out.j < out.xs.size() && !(z_plus < out.xs[out.j] + eps)) ++out.j;
  if (out.i >= out.xs.size() || out.j >= out.xs.size())
    throw std::logic_error("intersection abscissa beyond the last concave corner");
  if (out.i > 0 && !(out.ys[out.i - 1] + eps < z_minus))
    throw std::logic_error("z_minus does not sit on a falling stretch");
  if (out.j > 0 && !(out.ys[out.j - 1] + eps <= z_plus))
    throw std::logic_error("z_plus does not sit on a falling stretch");
  return out;
}

/// Exact lower bound for the tail mass of the shifted diagram:
/// integral of P_min(z_plus, eps, z + eps) against the transition measure of
/// the base zigzag. Always <= mu_shifted((z_plus, infinity)).
template <class T>
T tail_lower_bound(const Zigzag<T>& omega, const T& eps, const AffineLine<T>& line) {
  auto [z_minus, z_plus] = intersections(to_diagram(omega), eps, line);
  (void)z_minus;
  auto mu = transition_measure(omega);
  T s = T(0);
  for (const auto& a : mu.atoms()) s += a.weight * p_min(z_plus, eps, T(a.location + eps));
  return s;
}

/// Maximal solution of Omega(z - eps) - Omega(z0 - eps) = z - z0 - 2 eps.
/// Empty when the weakly decreasing scan function has no zero or stays zero
/// on an unbounded tail. Any returned solution satisfies z >= z0 + eps.
template <class T>
std::optional<T> z_plus_max(const PiecewiseDiagram<T>& omega, const T& z0, const T& eps) {
  if (!(eps > T(0))) throw std::invalid_argument("z_plus_max needs eps > 0");
  const T shift_constant = z0 + eps + eps - omega(z0 - eps);
  detail::DecreasingPL<T> f;
  f.left_slope = T(-2);
  f.right_slope = T(0);
  for (const auto& p : omega.breakpoints()) {
    f.z.push_back(p.u + eps);
    f.g.push_back(p.v - p.u - eps + shift_constant);
  }
  return f.maximal_root();
}

template <class T>
std::optional<T> z_minus_min(const PiecewiseDiagram<T>& omega, const T& z0, const T& eps) {
  auto m = z_plus_max(transpose(omega), T(-z0), eps);
  if (!m) return std::nullopt;
  return T(-*m);
}

enum class BoundSide { upper, lower };

template <class T>
struct BoundReport {
  T z_star;  // z_plus_max for the upper side, z_minus_min for the lower
  T bound_value;
  BoundSide side;
  T epsilon;
  T z0;
};

namespace detail {

// 1 - integral over [zhat, inf) of [1 - eps/(z + 2 eps - z_plus_max)] dmu,
// zhat = z_plus_max - eps. The integrand equals 1 at z = zhat exactly, so
// the half-open bookkeeping at the cut is unambiguous.
template <class T>
T upper_bound_from_measure(const AtomicMeasure<T>& mu, const T& zpm, const T& eps) {
  const T zhat = zpm - eps;
  T integral = T(0);
  for (const auto& a : mu.atoms())
    if (!(a.location < zhat))
      integral += a.weight * (T(1) - eps / (a.location + eps + eps - zpm));
  return T(1) - integral;
}

template <class T>
T lower_bound_from_measure(const AtomicMeasure<T>& mu, const T& zmm, const T& eps) {
  const T zhat = zmm + eps;
  T integral = T(0);
  for (const auto& a : mu.atoms())
    if (!(a.location > zhat))
      integral += a.weight * (T(1) - eps / (zmm + eps + eps - a.location));
  return integral;
}

}  // namespace detail

/// Upper bound for lim K_omega(z0 - tau) over every omega with
/// d(Omega, omega) <= eps, from the exact transition measure of the zigzag.
template <class T>
std::optional<BoundReport<T>> upper_bound_cdf(const Zigzag<T>& Omega, const T& z0, const T& eps) {
  auto zpm = z_plus_max(to_diagram(Omega), z0, eps);
  if (!zpm) return std::nullopt;
  T value = detail::upper_bound_from_measure(transition_measure(Omega), *zpm, eps);
  return BoundReport<T>{*zpm, value, BoundSide::upper, eps, z0};
}

/// Mirror lower bound for K_omega(z0), through the transposed diagram.
template <class T>
std::optional<BoundReport<T>> lower_bound_cdf(const Zigzag<T>& Omega, const T& z0, const T& eps) {
  auto zmm = z_minus_min(to_diagram(Omega), z0, eps);
  if (!zmm) return std::nullopt;
  T value = detail::lower_bound_from_measure(transition_measure(Omega), *zmm, eps);
  return BoundReport<T>{*zmm, value, BoundSide::lower, eps, z0};
}

/// The reference diagram of the steepest-comparison argument: the eps-shift
/// of Omega along the slope-one line through (z0, omega(z0)). Requires
/// omega(z0) > z0; then lim K_omega(z0 - tau) <= K_shifted(z0). Any positive
/// intercept is accepted; when omega(z0) barely exceeds z0 the floating
/// build is ill-conditioned and the rational overload is the reliable path.
template <class T>
ShiftReport<T> steepest_reference(const PiecewiseDiagram<T>& Omega,
                                  const PiecewiseDiagram<T>& omega, const T& z0, const T& eps) {
  T v = omega(z0);
  if (!(v > z0))
    throw std::invalid_argument("steepest_reference needs omega(z0) > z0");
  return shifted_diagram(Omega, eps, AffineLine<T>(v - z0));
}

namespace detail {

// Residue measure when Omega is a zigzag, inner-approximation measure at
// resolution n_max otherwise.
inline AtomicMeasure<double> bound_measure(const Diagram& Omega, int n_max) {
  try {
    return convert_measure<double>(transition_measure(corners_of(Omega)));
  } catch (const std::invalid_argument&) {
    return inner_measure(Omega, n_max);
  }
}

}  // namespace detail

/// Floating variant for general continual diagrams.
inline std::optional<BoundReport<double>> upper_bound_cdf(const Diagram& Omega, double z0,
                                                          double eps, int n_max) {
  auto zpm = z_plus_max(Omega, z0, eps);
  if (!zpm) return std::nullopt;
  double value = detail::upper_bound_from_measure(detail::bound_measure(Omega, n_max), *zpm, eps);
  return BoundReport<double>{*zpm, value, BoundSide::upper, eps, z0};
}

inline std::optional<BoundReport<double>> lower_bound_cdf(const Diagram& Omega, double z0,
                                                          double eps, int n_max) {
  auto zmm = z_minus_min(Omega, z0, eps);
  if (!zmm) return std::nullopt;
  double value = detail::lower_bound_from_measure(detail::bound_measure(Omega, n_max), *zmm, eps);
  return BoundReport<double>{*zmm, value, BoundSide::lower, eps, z0};
}

}  // namespace kerov
