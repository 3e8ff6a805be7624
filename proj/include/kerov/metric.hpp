#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"

namespace kerov {

template <class T>
struct Interval {
  T lo;
  T hi;
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Union of disjoint closed intervals on the nonnegative half-axis, in
/// French coordinates. Projections of continual diagrams are in fact single
/// intervals; the type stays general so Hausdorff arithmetic is reusable.
template <class T>
struct ProjectionSet {
  std::vector<Interval<T>> intervals;
};

namespace detail {

// French x-coordinate along the graph, s(u) = (d(u) + u) / 2. It is weakly
// increasing and continuous with s = 0 left of the support and s = u on the
// right tail, so every level set is a closed interval of u.
template <class T>
struct SweepSolver {
  const PiecewiseDiagram<T>* d;
  std::vector<T> s;  // s at each breakpoint

  explicit SweepSolver(const PiecewiseDiagram<T>& diagram) : d(&diagram) {
    s.reserve(d->breakpoints().size());
    for (const auto& p : d->breakpoints()) s.push_back((p.v + p.u) / T(2));
  }

  // Level set {u : s(u) == x} for x > 0 as [u_lo, u_hi]; for x == 0 the set
  // is unbounded below and u_lo is reported as "left ray" via the flag.
  struct Level {
    T u_lo;
    T u_hi;
    bool left_ray;
  };

  Level solve(const T& x) const {
    const auto& pts = d->breakpoints();
    // End snapping in the diagram constructor guarantees s.front() == 0, so
    // x == 0 is exactly the unbounded-ray level.
    if (x == T(0)) {
      T u0 = pts.front().u;
      for (std::size_t k = 0; k + 1 < pts.size() && s[k + 1] == T(0); ++k) u0 = pts[k + 1].u;
      return {u0, u0, true};
    }
    const T tol = merge_tolerance(T{}) * (T(1) + detail::abs_of(x));
    T u_lo{}, u_hi{};
    bool found = false;
    auto add = [&](const T& lo, const T& hi) {
      if (!found) {
        u_lo = lo;
        u_hi = hi;
        found = true;
        return;
      }
      u_lo = std::min(u_lo, lo);
      u_hi = std::max(u_hi, hi);
    };
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (s[k] - tol > x || x > s[k + 1] + tol) continue;
      if (s[k + 1] - s[k] <= tol + tol) {
        // Slope -1 stretch: the whole segment sits at this level.
        add(pts[k].u, pts[k + 1].u);
      } else {
        T t = (x - s[k]) / (s[k + 1] - s[k]);
        t = std::min(std::max(t, T(0)), T(1));
        T u = pts[k].u + t * (pts[k + 1].u - pts[k].u);
        add(u, u);
      }
    }
    if (x >= s.back() - tol) {
      T u = std::max(x, pts.back().u);  // right tail, s(u) = u
      add(u, u);
    }
    if (!found) throw std::logic_error("sweep level not found");
    return {u_lo, u_hi, false};
  }
};

template <class T>
T point_to_set(const T& x, const ProjectionSet<T>& b) {
  T best = detail::abs_of(x - b.intervals.front().lo);
  for (const auto& iv : b.intervals) {
    if (x >= iv.lo && x <= iv.hi) return T(0);
    best = std::min(best, std::min(detail::abs_of(x - iv.lo), detail::abs_of(x - iv.hi)));
  }
  return best;
}

template <class T>
T directed_hausdorff(const ProjectionSet<T>& a, const ProjectionSet<T>& b) {
  T best = T(0);
  for (const auto& iv : a.intervals) {
    best = std::max(best, point_to_set(iv.lo, b));
    best = std::max(best, point_to_set(iv.hi, b));
  }
  // The distance to b, restricted to an interval of a, peaks either at the
  // interval ends or at midpoints of gaps between consecutive b-intervals.
  for (std::size_t k = 0; k + 1 < b.intervals.size(); ++k) {
    T mid = (b.intervals[k].hi + b.intervals[k + 1].lo) / T(2);
    for (const auto& iv : a.intervals)
      if (mid >= iv.lo && mid <= iv.hi) best = std::max(best, point_to_set(mid, b));
  }
  return best;
}

}  // namespace detail

/// Hausdorff distance between unions of closed intervals, exact from the
/// endpoint and gap-midpoint candidates.
template <class T>
T hausdorff(const ProjectionSet<T>& a, const ProjectionSet<T>& b) {
  if (a.intervals.empty() || b.intervals.empty())
    throw std::invalid_argument("hausdorff needs nonempty sets");
  return std::max(detail::directed_hausdorff(a, b), detail::directed_hausdorff(b, a));
}

/// Y-projection: { y >= 0 : d(x - y) = x + y }, a single closed interval.
/// At x = 0 the set is an unbounded ray along the y-axis which is cut at
/// cap; beyond the common support two diagrams' rays agree, so any cap above
/// both supports leaves the metric unchanged.
template <class T>
ProjectionSet<T> project_y(const PiecewiseDiagram<T>& d, const T& x, const T& cap) {
  if (x < T(0)) throw std::invalid_argument("project_y needs x >= 0");
  detail::SweepSolver<T> sweep(d);
  auto level = sweep.solve(x);
  T y_min = x - level.u_hi;
  T y_max = level.left_ray ? cap : x - level.u_lo;
  return ProjectionSet<T>{{Interval<T>{y_min, std::max(y_min, y_max)}}};
}

template <class T>
ProjectionSet<T> project_x(const PiecewiseDiagram<T>& d, const T& y, const T& cap) {
  return project_y(transpose(d), y, cap);
}

template <class T>
ProjectionSet<T> project_y(const PiecewiseDiagram<T>& d, const T& x) {
  return project_y(d, x, d.support_radius() + T(1));
}

template <class T>
ProjectionSet<T> project_x(const PiecewiseDiagram<T>& d, const T& y) {
  return project_x(d, y, d.support_radius() + T(1));
}

namespace detail {

// sup over x >= 0 of the Hausdorff distance between y-projections. Both
// interval endpoints are piecewise affine in x with kinks exactly at the
// breakpoint sweep values of either diagram, so the sup is attained on that
// finite critical set.
template <class T>
T projection_distance(const PiecewiseDiagram<T>& d1, const PiecewiseDiagram<T>& d2, const T& cap) {
  std::vector<T> xs{T(0)};
  for (const auto& p : d1.breakpoints()) xs.push_back((p.v + p.u) / T(2));
  for (const auto& p : d2.breakpoints()) xs.push_back((p.v + p.u) / T(2));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  T best = T(0);
  for (const T& x : xs)
    best = std::max(best, hausdorff(project_y(d1, x, cap), project_y(d2, x, cap)));
  return best;
}

}  // namespace detail

/// The metric d: the larger of the sup-Hausdorff distances between
/// x-projections and between y-projections.
template <class T>
T distance(const PiecewiseDiagram<T>& d1, const PiecewiseDiagram<T>& d2) {
  const T cap = std::max(d1.support_radius(), d2.support_radius()) + T(1);
  T dy = detail::projection_distance(d1, d2, cap);
  T dx = detail::projection_distance(transpose(d1), transpose(d2), cap);
  return std::max(dx, dy);
}

}  // namespace kerov
