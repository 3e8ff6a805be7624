#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"
#include "kerov/partition.hpp"

namespace kerov {

namespace detail {
inline double interlace_tolerance(double) { return 1e-9; }
inline Rational interlace_tolerance(const Rational&) { return Rational(0); }
}  // namespace detail

/// A zigzag: a continual diagram whose slopes are exactly +-1, recorded by
/// the u-coordinates of its concave corners x_0 < ... < x_L (local minima)
/// and convex corners y_1 < ... < y_L (local maxima). The corners must
/// strictly interlace and satisfy the centering identity sum(x) == sum(y),
/// which is exactly the condition that the profile closes onto v = |u| on
/// both tails. L = 0 is the empty diagram, concave = {0}.
template <class T>
class Zigzag {
 public:
  Zigzag() : concave_{T(0)} {}

  Zigzag(std::vector<T> concave, std::vector<T> convex)
      : concave_(std::move(concave)), convex_(std::move(convex)) {
    if (concave_.empty()) throw std::invalid_argument("zigzag needs at least one concave corner");
    if (convex_.size() + 1 != concave_.size())
      throw std::invalid_argument("zigzag needs exactly one more concave corner than convex");
    for (std::size_t k = 0; k < convex_.size(); ++k)
      if (!(concave_[k] < convex_[k] && convex_[k] < concave_[k + 1]))
        throw std::invalid_argument("zigzag corners must strictly interlace");
    T defect = T(0);
    for (const T& x : concave_) defect += x;
    for (const T& y : convex_) defect -= y;
    if (detail::abs_of(defect) > detail::interlace_tolerance(T{}))
      throw std::invalid_argument("zigzag is not centered: sum(x) != sum(y)");
  }

  const std::vector<T>& concave() const { return concave_; }
  const std::vector<T>& convex() const { return convex_; }
  std::size_t order() const { return convex_.size(); }  // L
  bool is_empty() const { return convex_.empty(); }

  friend bool operator==(const Zigzag& a, const Zigzag& b) {
    return a.concave_ == b.concave_ && a.convex_ == b.convex_;
  }

 private:
  std::vector<T> concave_;
  std::vector<T> convex_;
};

using ExactZigzag = Zigzag<Rational>;

/// Profile of a Young diagram: concave corners at the contents of addable
/// boxes, convex corners at the contents of removable boxes.
template <class T = Rational>
Zigzag<T> profile_of(const Partition& p) {
  std::vector<T> concave, convex;
  for (long long c : addable_contents(p)) concave.push_back(T(c));
  for (long long c : removable_contents(p)) convex.push_back(T(c));
  return Zigzag<T>(std::move(concave), std::move(convex));
}

/// Breakpoint form of a zigzag. Heights follow from alternating slopes
/// starting at (x_0, |x_0|); the centering identity makes the right tail
/// close exactly.
template <class T>
PiecewiseDiagram<T> to_diagram(const Zigzag<T>& z) {
  std::vector<BreakPoint<T>> pts;
  const auto& xs = z.concave();
  const auto& ys = z.convex();
  T v = detail::abs_of(xs.front());
  pts.push_back({xs.front(), v});
  for (std::size_t k = 0; k < ys.size(); ++k) {
    v += ys[k] - xs[k];
    pts.push_back({ys[k], v});
    v -= xs[k + 1] - ys[k];
    pts.push_back({xs[k + 1], v});
  }
  return PiecewiseDiagram<T>::from_breakpoints(std::move(pts));
}

/// Corner extraction, the inverse of to_diagram. Requires every segment
/// slope to be +-1 (within 1e-9 for floating builds).
template <class T>
Zigzag<T> corners_of(const PiecewiseDiagram<T>& d) {
  const auto& pts = d.breakpoints();
  if (d.is_trivial()) {
    if (!(pts.front().u == T(0)))
      throw std::invalid_argument("trivial diagram with nonzero support is not centered");
    return Zigzag<T>();
  }
  const T tol = detail::interlace_tolerance(T{});
  std::vector<int> slope;  // per segment, +1 or -1
  for (std::size_t k = 1; k < pts.size(); ++k) {
    T s = (pts[k].v - pts[k - 1].v) / (pts[k].u - pts[k - 1].u);
    if (detail::abs_of(s - T(1)) <= tol)
      slope.push_back(+1);
    else if (detail::abs_of(s + T(1)) <= tol)
      slope.push_back(-1);
    else
      throw std::invalid_argument("diagram is not a zigzag: slope differs from +-1");
  }
  std::vector<T> concave, convex;
  concave.push_back(pts.front().u);  // left tail has slope -1, first segment +1
  if (slope.front() != +1)
    throw std::invalid_argument("diagram is not a zigzag: leftmost corner is not concave");
  for (std::size_t k = 1; k < slope.size(); ++k) {
    if (slope[k] == slope[k - 1])
      throw std::invalid_argument("diagram is not a zigzag: consecutive equal slopes");
    if (slope[k] == -1)
      convex.push_back(pts[k].u);
    else
      concave.push_back(pts[k].u);
  }
  if (slope.back() != -1)
    throw std::invalid_argument("diagram is not a zigzag: rightmost corner is not concave");
  concave.push_back(pts.back().u);
  return Zigzag<T>(std::move(concave), std::move(convex));
}

template <class To, class From>
Zigzag<To> convert_zigzag(const Zigzag<From>& z) {
  if constexpr (std::is_same_v<To, From>) {
    return z;
  } else {
    std::vector<To> xs, ys;
    for (const auto& x : z.concave()) xs.push_back(static_cast<To>(to_double(x)));
    for (const auto& y : z.convex()) ys.push_back(static_cast<To>(to_double(y)));
    return Zigzag<To>(std::move(xs), std::move(ys));
  }
}

}  // namespace kerov
