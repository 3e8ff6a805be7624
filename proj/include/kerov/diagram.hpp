#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "kerov/arithmetic.hpp"

namespace kerov {

template <class T>
struct BreakPoint {
  T u;
  T v;
  friend bool operator==(const BreakPoint& a, const BreakPoint& b) {
    return a.u == b.u && a.v == b.v;
  }
};

namespace detail {

inline double merge_tolerance(double) { return 1e-12; }
inline Rational merge_tolerance(const Rational&) { return Rational(0); }

template <class T>
T abs_of(const T& x) {
  return x < T(0) ? T(-x) : x;
}

}  // namespace detail

/// A continual diagram: a 1-Lipschitz function equal to |u| outside a
/// compact interval, stored as breakpoints of its piecewise-linear graph in
/// Russian coordinates. Every segment slope lies in [-1, 1] and the value
/// never drops below |u|. Construction canonicalizes the breakpoint list:
/// points that lie on the |u| tails and collinear interior points are
/// merged (absolute tolerance 1e-12 for floating builds, exact otherwise),
/// so the representation of a given function is unique. Instances are
/// immutable values.
template <class T>
class PiecewiseDiagram {
 public:
  // The diagram of the empty partition, v = |u|.
  PiecewiseDiagram() : pts_{BreakPoint<T>{T(0), T(0)}} {}

  static PiecewiseDiagram from_breakpoints(std::vector<BreakPoint<T>> pts) {
    return PiecewiseDiagram(normalize(std::move(pts)));
  }

  const std::vector<BreakPoint<T>>& breakpoints() const { return pts_; }

  T operator()(const T& u) const { return evaluate(u); }

  T evaluate(const T& u) const {
    if (u <= pts_.front().u || u >= pts_.back().u) return detail::abs_of(u);
    // Rightmost breakpoint with pts_[k].u <= u.
    std::size_t lo = 0, hi = pts_.size() - 1;
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (pts_[mid].u <= u)
        lo = mid;
      else
        hi = mid;
    }
    const auto& a = pts_[lo];
    const auto& b = pts_[hi];
    return a.v + (u - a.u) * (b.v - a.v) / (b.u - a.u);
  }

  // Smallest C with evaluate(u) == |u| outside [-C, C].
  T support_radius() const {
    return std::max(detail::abs_of(pts_.front().u), detail::abs_of(pts_.back().u));
  }

  bool is_trivial() const { return pts_.size() == 1; }

  friend bool operator==(const PiecewiseDiagram& a, const PiecewiseDiagram& b) {
    return a.pts_ == b.pts_;
  }

 private:
  explicit PiecewiseDiagram(std::vector<BreakPoint<T>> pts) : pts_(std::move(pts)) {}

  static bool on_abs(const BreakPoint<T>& p, const T& tol) {
    return detail::abs_of(p.v - detail::abs_of(p.u)) <= tol;
  }

  // True when the whole segment between a and b lies on the graph of |u|.
  static bool segment_on_abs(const BreakPoint<T>& a, const BreakPoint<T>& b, const T& tol) {
    if (!on_abs(a, tol) || !on_abs(b, tol)) return false;
    return !(a.u < T(0) && b.u > T(0));
  }

  static std::vector<BreakPoint<T>> normalize(std::vector<BreakPoint<T>> pts) {
    const T tol = detail::merge_tolerance(T{});
    if (pts.empty()) return {BreakPoint<T>{T(0), T(0)}};
    for (std::size_t k = 1; k < pts.size(); ++k)
      if (pts[k].u - pts[k - 1].u < -tol)
        throw std::invalid_argument("breakpoints must be sorted by u");

    // Merge u-duplicates, keeping the first occurrence.
    std::vector<BreakPoint<T>> dedup;
    for (auto& p : pts) {
      if (!dedup.empty() && p.u - dedup.back().u <= tol) {
        if (detail::abs_of(p.v - dedup.back().v) > tol)
          throw std::invalid_argument("conflicting values at one abscissa");
        continue;
      }
      dedup.push_back(std::move(p));
    }

    // Strip endpoints whose adjacent segment already lies on the |u| tails.
    while (dedup.size() >= 2 && segment_on_abs(dedup[0], dedup[1], tol)) dedup.erase(dedup.begin());
    while (dedup.size() >= 2 && segment_on_abs(dedup[dedup.size() - 2], dedup.back(), tol))
      dedup.pop_back();
    if (dedup.size() == 1 && on_abs(dedup[0], tol)) dedup[0] = BreakPoint<T>{T(0), T(0)};

    // Merge collinear interior breakpoints.
    std::vector<BreakPoint<T>> out;
    for (const auto& p : dedup) {
      while (out.size() >= 2) {
        const auto& a = out[out.size() - 2];
        const auto& b = out.back();
        // Collinearity of a, b, p by cross product; tolerance scaled by span.
        T cross = (b.v - a.v) * (p.u - a.u) - (p.v - a.v) * (b.u - a.u);
        if (detail::abs_of(cross) <= tol * (p.u - a.u + T(1)))
          out.pop_back();
        else
          break;
      }
      out.push_back(p);
    }

    // Snap the ends onto v = |u| so that sweep coordinates built from them
    // vanish exactly at the support boundary. The drift is bounded first.
    const T slack = tol > T(0) ? T(tol * T(1000)) : T(0);
    if (detail::abs_of(out.front().v - detail::abs_of(out.front().u)) > slack ||
        detail::abs_of(out.back().v - detail::abs_of(out.back().u)) > slack)
      throw std::invalid_argument("diagram must meet v = |u| at both ends");
    out.front().v = detail::abs_of(out.front().u);
    out.back().v = detail::abs_of(out.back().u);

    validate(out, tol);
    return out;
  }

  static void validate(const std::vector<BreakPoint<T>>& pts, const T& tol) {
    const T slack = tol > T(0) ? T(tol * T(1000)) : T(0);  // 1e-9 for floating builds
    if (detail::abs_of(pts.front().v - detail::abs_of(pts.front().u)) > slack ||
        detail::abs_of(pts.back().v - detail::abs_of(pts.back().u)) > slack)
      throw std::invalid_argument("diagram must meet v = |u| at both ends");
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (pts[k].v < detail::abs_of(pts[k].u) - slack)
        throw std::invalid_argument("diagram value below |u|");
      if (k == 0) continue;
      T du = pts[k].u - pts[k - 1].u;
      T dv = pts[k].v - pts[k - 1].v;
      if (detail::abs_of(dv) > du * (T(1) + slack))
        throw std::invalid_argument("diagram segment slope outside [-1, 1]");
    }
  }

  std::vector<BreakPoint<T>> pts_;
};

using Diagram = PiecewiseDiagram<double>;
using ExactDiagram = PiecewiseDiagram<Rational>;

/// Homothety with box size c > 0: result(u) = c * d(u / c).
template <class T>
PiecewiseDiagram<T> rescale(const PiecewiseDiagram<T>& d, const T& c) {
  if (!(c > T(0))) throw std::invalid_argument("rescale needs c > 0");
  std::vector<BreakPoint<T>> pts;
  pts.reserve(d.breakpoints().size());
  for (const auto& p : d.breakpoints()) pts.push_back({c * p.u, c * p.v});
  return PiecewiseDiagram<T>::from_breakpoints(std::move(pts));
}

/// result(u) = d(-u); for partition profiles this is the conjugate shape.
template <class T>
PiecewiseDiagram<T> transpose(const PiecewiseDiagram<T>& d) {
  std::vector<BreakPoint<T>> pts;
  pts.reserve(d.breakpoints().size());
  for (auto it = d.breakpoints().rbegin(); it != d.breakpoints().rend(); ++it)
    pts.push_back({-it->u, it->v});
  return PiecewiseDiagram<T>::from_breakpoints(std::move(pts));
}

/// The limit shape of rescaled staircases: sqrt(2) on [-sqrt(2), sqrt(2)].
inline Diagram triangle_diagram() {
  const double r = std::sqrt(2.0);
  return Diagram::from_breakpoints({{-r, r}, {r, r}});
}

template <class To, class From>
PiecewiseDiagram<To> convert_diagram(const PiecewiseDiagram<From>& d) {
  if constexpr (std::is_same_v<To, From>) {
    return d;
  } else {
    std::vector<BreakPoint<To>> pts;
    pts.reserve(d.breakpoints().size());
    for (const auto& p : d.breakpoints()) {
      if constexpr (std::is_same_v<To, double>)
        pts.push_back({to_double(p.u), to_double(p.v)});
      else
        pts.push_back({To(p.u), To(p.v)});  // binary double to rational is exact
    }
    return PiecewiseDiagram<To>::from_breakpoints(std::move(pts));
  }
}

}  // namespace kerov
