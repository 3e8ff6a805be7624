#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kerov/approximation.hpp"
#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"
#include "kerov/measure.hpp"
#include "kerov/metric.hpp"
#include "kerov/partition.hpp"
#include "kerov/rng.hpp"
#include "kerov/shift.hpp"
#include "kerov/transition.hpp"
#include "kerov/zigzag.hpp"

namespace kerov {

// ---------------------------------------------------------------------------
// Staircase-to-arcsine convergence of cumulative functions.

struct RateRow {
  int N = 0;
  long long n = 0;  // N (N + 1) / 2
  double sup_error = 0.0;
  double scaled_error = 0.0;  // N * sup_error
};

namespace detail {

// Step function of the rescaled Feller measure, with exact partial sums
// converted to double only at the end.
struct StepCdf {
  std::vector<double> locations;
  std::vector<double> cumulative;  // cumulative[k] = mu((-inf, locations[k]])

  double cdf(double t) const {
    auto it = std::upper_bound(locations.begin(), locations.end(), t);
    if (it == locations.begin()) return 0.0;
    return cumulative[static_cast<std::size_t>(it - locations.begin()) - 1];
  }

  double cdf_left(double t) const {
    auto it = std::lower_bound(locations.begin(), locations.end(), t);
    if (it == locations.begin()) return 0.0;
    return cumulative[static_cast<std::size_t>(it - locations.begin()) - 1];
  }
};

inline StepCdf rescaled_feller_cdf(int N) {
  const double scale = 1.0 / std::sqrt(N * (N + 1) / 2.0);
  auto feller = feller_measure(N);
  StepCdf out;
  Rational cum(0);
  for (const auto& a : feller.atoms()) {
    cum += a.weight;
    out.locations.push_back(to_double(a.location) * scale);
    out.cumulative.push_back(to_double(cum));
  }
  return out;
}

}  // namespace detail

/// Sup over [a0, b0] of |K_staircase(N, rescaled) - K_arcsine|, one row per
/// N. The sup of a step-versus-smooth difference is attained at the jumps,
/// so the grid is augmented with every atom location in the window and both
/// one-sided values are compared at each candidate.
inline std::vector<RateRow> staircase_rate_table(const std::vector<int>& Ns, double a0, double b0,
                                                 int grid_points) {
  const double r = std::sqrt(2.0);
  if (!(-r < a0 && a0 < b0 && b0 < r))
    throw std::invalid_argument("rate window must sit strictly inside (-sqrt(2), sqrt(2))");
  if (grid_points < 100) throw std::invalid_argument("rate table needs at least 100 grid points");
  std::vector<RateRow> rows;
  rows.reserve(Ns.size());
  for (int N : Ns) {
    if (N < 1) throw std::invalid_argument("staircase rate table needs N >= 1");
    auto step = detail::rescaled_feller_cdf(N);
    std::vector<double> zs;
    zs.reserve(static_cast<std::size_t>(grid_points) + step.locations.size());
    for (int k = 0; k < grid_points; ++k)
      zs.push_back(a0 + (b0 - a0) * k / (grid_points - 1));
    for (double loc : step.locations)
      if (a0 <= loc && loc <= b0) zs.push_back(loc);
    double sup = 0.0;
    for (double z : zs) {
      const double target = arcsine_cdf(z);
      sup = std::max(sup, std::abs(step.cdf(z) - target));
      sup = std::max(sup, std::abs(step.cdf_left(z) - target));
    }
    RateRow row;
    row.N = N;
    row.n = static_cast<long long>(N) * (N + 1) / 2;
    row.sup_error = sup;
    row.scaled_error = N * sup;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Metric convergence of rescaled staircases to the triangle diagram.

struct MetricRateRow {
  int N = 0;
  double dist = 0.0;
  double scaled = 0.0;  // N * dist
};

inline std::vector<MetricRateRow> metric_rate_table(const std::vector<int>& Ns) {
  const Diagram triangle = triangle_diagram();
  std::vector<MetricRateRow> rows;
  rows.reserve(Ns.size());
  for (int N : Ns) {
    if (N < 1) throw std::invalid_argument("metric rate table needs N >= 1");
    const double n = N * (N + 1) / 2.0;
    Diagram omega_n =
        rescale(convert_diagram<double>(to_diagram(profile_of(staircase(N)))), 1.0 / std::sqrt(n));
    MetricRateRow row;
    row.N = N;
    row.dist = distance(omega_n, triangle);
    row.scaled = N * row.dist;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Random zigzags inside a metric ball.

/// Random corner perturbation of a zigzag. The pair (x_k, y_{k+1}) bounds a
/// rising segment; sliding the pair rigidly by delta keeps sum(x) - sum(y)
/// exactly zero, so the centering identity never needs repair. Deltas are
/// multiples of amp/q capped below a third of the gaps adjacent to the pair,
/// which keeps the corners strictly interlaced.
inline ExactZigzag jitter_zigzag(const ExactZigzag& z, const Rational& amp, long long q,
                                 SplitMix64& rng) {
  std::vector<Rational> xs = z.concave();
  std::vector<Rational> ys = z.convex();
  const std::size_t L = ys.size();
  for (std::size_t k = 0; k < L; ++k) {
    Rational delta = amp * Rational(rng.next_signed(q), q);
    Rational cap = amp;
    if (k > 0) cap = std::min(cap, (z.concave()[k] - z.convex()[k - 1]) / 3);
    cap = std::min(cap, (z.concave()[k + 1] - z.convex()[k]) / 3);
    delta = std::min(std::max(delta, -cap), cap);
    xs[k] += delta;
    ys[k] += delta;
  }
  return ExactZigzag(std::move(xs), std::move(ys));
}

/// Random corner clips. Filling a concave corner x with a bump of depth t
/// replaces it by concave corners x - t, x + t and a convex corner at x;
/// notching a convex corner y replaces it by convex y - t, y + t and a
/// concave corner at y. Either move keeps sum(x) - sum(y) exactly zero and
/// changes every projection section by at most t, so the result stays inside
/// the max-depth ball around the original. Depths are multiples of
/// max_depth/q capped below a third of the neighbor gaps.
///
/// Sliding moves (jitter_zigzag) leave the ball of a zigzag with unit edges
/// no matter how small the step: a slid edge sits at a new section abscissa,
/// where the Hausdorff gap jumps to the full edge length. Clips are the
/// perturbations that respect the section alignment the metric enforces.
inline ExactZigzag clip_corners(const ExactZigzag& z, const Rational& max_depth, long long q,
                                SplitMix64& rng) {
  const auto& xs = z.concave();
  const auto& ys = z.convex();
  const std::size_t L = ys.size();
  std::vector<Rational> nx, ny;
  auto depth = [&](const Rational& left_gap, const Rational& right_gap) {
    Rational cap = std::min(max_depth, std::min(left_gap, right_gap) / 3);
    Rational t = cap * Rational(static_cast<long long>(rng.next_below(q)) + 1, q);
    return t;
  };
  for (std::size_t k = 0; k <= L; ++k) {
    bool clip = (rng.next() & 1) != 0;
    if (!clip) {
      nx.push_back(xs[k]);
      continue;
    }
    Rational left = k > 0 ? xs[k] - ys[k - 1] : Rational(1);
    Rational right = k < L ? ys[k] - xs[k] : Rational(1);
    Rational t = depth(left, right);
    nx.push_back(xs[k] - t);
    nx.push_back(xs[k] + t);
    ny.push_back(xs[k]);
  }
  for (std::size_t k = 0; k < L; ++k) {
    bool clip = (rng.next() & 1) != 0;
    if (!clip) {
      ny.push_back(ys[k]);
      continue;
    }
    Rational t = depth(ys[k] - xs[k], xs[k + 1] - ys[k]);
    ny.push_back(ys[k] - t);
    ny.push_back(ys[k] + t);
    nx.push_back(ys[k]);
  }
  std::sort(nx.begin(), nx.end());
  std::sort(ny.begin(), ny.end());
  return ExactZigzag(std::move(nx), std::move(ny));
}

/// Rejection sampler for the eps-ball around an exact zigzag, with the ball
/// membership verified in exact rational arithmetic. Clips stay in the ball
/// by construction, so the verification loop essentially never iterates.
inline ExactZigzag sample_in_ball(const ExactZigzag& center, const Rational& eps, SplitMix64& rng,
                                  int max_tries = 16) {
  const ExactDiagram center_diagram = to_diagram(center);
  Rational amp = eps;
  for (int t = 0; t < max_tries; ++t) {
    ExactZigzag candidate = clip_corners(center, amp, 8, rng);
    if (distance(to_diagram(candidate), center_diagram) <= eps) return candidate;
    amp /= 2;
  }
  return center;
}

/// Ball sampler against a floating reference diagram (the triangle has
/// irrational corners, so membership is checked in double with a safety
/// margin while the sample itself stays exactly rational).
inline ExactZigzag sample_in_ball_near_triangle(const ExactZigzag& base, const Diagram& reference,
                                                double eps, long long grid, SplitMix64& rng) {
  if (!(distance(convert_diagram<double>(to_diagram(base)), reference) <= eps))
    throw std::invalid_argument("ball sampler: base zigzag is outside the ball");
  // Jitter on a coarse rational grid aligned with the base resolution; tiny
  // binary-float denominators would bloat the exact residue arithmetic.
  Rational amp(std::max<long long>(1, static_cast<long long>(eps * grid / 4)), grid);
  for (int t = 0; t < 64; ++t) {
    ExactZigzag candidate = jitter_zigzag(base, amp, 8, rng);
    double d = distance(convert_diagram<double>(to_diagram(candidate)), reference);
    if (d <= eps * (1.0 - 1e-9)) return candidate;
    amp /= 2;
  }
  return base;
}

// ---------------------------------------------------------------------------
// Theorem sweep: bound soundness and the eps log(1/eps) envelope.

struct SweepRow {
  double epsilon = 0.0;
  double z0 = 0.0;
  int sample = 0;
  double k_left = 0.0;   // exact K_omega(z0-)
  double k_right = 0.0;  // exact K_omega(z0)
  double upper = 0.0;
  double lower = 0.0;
  double margin_upper = 0.0;  // upper - k_left, >= 0 when sound
  double margin_lower = 0.0;  // k_right - lower, >= 0 when sound
  double term_corner = 0.0;   // mu_Omega((z0, z_plus_max - eps])
  double term_window = 0.0;   // eps rho log((b - a0) / eps)
  double term_tail = 0.0;     // eps / (b - z_plus_max)
};

struct SweepResult {
  long long violations = 0;
  double delta = 0.0;    // contraction margin of Omega on [a, b]
  double rho_max = 0.0;  // density bound echoed from the caller
  double max_envelope_ratio = 0.0;  // max margin / (eps log(1/eps))
  std::vector<SweepRow> rows;
};

namespace detail {

// Integral of f against the arcsine law over [lo, hi], via z = sqrt(2) sin t
// which absorbs the endpoint singularities of the density.
template <class F>
double arcsine_integral(F&& f, double lo, double hi) {
  const double r = std::sqrt(2.0);
  lo = std::max(lo, -r);
  hi = std::min(hi, r);
  if (!(lo < hi)) return 0.0;
  const double t0 = std::asin(lo / r);
  const double t1 = std::asin(hi / r);
  const int panels = 2000;
  const double h = (t1 - t0) / panels;
  double acc = 0.0;
  for (int k = 0; k <= panels; ++k) {
    double w = (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    acc += w * f(r * std::sin(t0 + k * h));
  }
  return acc * h / 3.0 / M_PI;
}

inline double upper_bound_arcsine(double z0, double eps, double zpm) {
  const double zhat = zpm - eps;
  double integral = arcsine_integral(
      [&](double z) { return 1.0 - eps / (z + 2 * eps - zpm); }, zhat, std::sqrt(2.0));
  return 1.0 - integral;
}

}  // namespace detail

/// Checks the upper and lower cumulative bounds against exact CDFs of random
/// zigzags in the eps-ball of the triangle diagram, and reports the bound
/// slack split into the three terms of the modulus-of-continuity estimate.
/// Omega must be the triangle diagram (its transition measure is the arcsine
/// law, which the bound integrals use in closed form); [a, b] with the
/// density cap rho_max are the hypothesis data and are echoed in the output.
inline SweepResult theorem_sweep(const Diagram& Omega, int ball_samples,
                                 const std::vector<double>& eps_list,
                                 const std::vector<double>& z0_grid, std::uint64_t seed,
                                 double a = -1.2, double b = 1.2, double rho_max = 0.0) {
  if (!(Omega == triangle_diagram()))
    throw std::invalid_argument("theorem_sweep: only the triangle reference diagram is supported");
  // Hypothesis check: contraction on [a, b].
  double max_slope = 0.0;
  const auto& pts = Omega.breakpoints();
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (pts[k].u < a || pts[k - 1].u > b) continue;
    max_slope = std::max(max_slope,
                         std::abs((pts[k].v - pts[k - 1].v) / (pts[k].u - pts[k - 1].u)));
  }
  SweepResult result;
  result.delta = 1.0 - max_slope;
  if (!(result.delta > 0.0))
    throw std::invalid_argument("theorem_sweep: Omega is not a contraction on [a, b]");
  result.rho_max = rho_max > 0.0 ? rho_max : arcsine_density(std::max(std::abs(a), std::abs(b)));

  SplitMix64 rng(seed);
  for (double eps : eps_list) {
    if (!(eps > 0.0)) throw std::invalid_argument("theorem_sweep needs eps > 0");
    // Rational base zigzag close to the triangle; corners are multiples of
    // 1/m, so sampled diagrams keep exact transition measures.
    const int m = std::max(8, static_cast<int>(std::ceil(6.0 / eps)));
    ExactZigzag base = corners_of(
        rescale(convert_diagram<Rational>(to_diagram(profile_of(inner_partition(Omega, m)))),
                Rational(1, m)));
    for (double z0 : z0_grid) {
      auto zpm = z_plus_max(Omega, z0, eps);
      auto zmm = z_minus_min(Omega, z0, eps);
      if (!zpm || !zmm) continue;  // bounds silent here; nothing to check
      const double upper = detail::upper_bound_arcsine(z0, eps, *zpm);
      const double lower = 1.0 - detail::upper_bound_arcsine(-z0, eps, -*zmm);
      for (int s = 0; s < ball_samples; ++s) {
        ExactZigzag omega = sample_in_ball_near_triangle(base, Omega, eps, 8 * m, rng);
        auto mu = transition_measure(omega);
        SweepRow row;
        row.epsilon = eps;
        row.z0 = z0;
        row.sample = s;
        row.k_left = to_double(mu.cdf_left(Rational(z0)));
        row.k_right = to_double(mu.cdf(Rational(z0)));
        row.upper = upper;
        row.lower = lower;
        row.margin_upper = upper - row.k_left;
        row.margin_lower = row.k_right - lower;
        row.term_corner = arcsine_cdf(*zpm - eps) - arcsine_cdf(z0);
        row.term_window = eps * result.rho_max * std::log((b - z0_grid.front()) / eps);
        row.term_tail = eps / std::max(b - *zpm, eps);
        if (row.margin_upper < -1e-9 || row.margin_lower < -1e-9) ++result.violations;
        const double env = eps * std::log(1.0 / eps);
        result.max_envelope_ratio = std::max(
            result.max_envelope_ratio,
            std::max(row.upper - arcsine_cdf(z0), arcsine_cdf(z0) - row.lower) / env);
        result.rows.push_back(row);
      }
    }
  }
  return result;
}

}  // namespace kerov
