#pragma once

#include <stdexcept>
#include <vector>

#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"
#include "kerov/measure.hpp"
#include "kerov/partition.hpp"
#include "kerov/transition.hpp"
#include "kerov/zigzag.hpp"

namespace kerov {

/// Largest Young diagram lambda with rescale(profile(lambda), 1/n) <= d
/// pointwise. Box (i, j) is kept iff d((i - j) / n) >= (i + j) / n; testing
/// the top vertex alone is enough because d is 1-Lipschitz, and the same
/// bound makes the kept rows automatically weakly decreasing.
inline Partition inner_partition(const Diagram& d, int n) {
  if (n < 1) throw std::invalid_argument("inner_partition needs n >= 1");
  std::vector<long long> rows;
  for (long long j = 1;; ++j) {
    long long i = 0;
    while (d(static_cast<double>(i + 1 - j) / n) >=
           static_cast<double>(i + 1 + j) / n - 1e-12)
      ++i;
    if (i == 0) break;
    rows.push_back(i);
  }
  return Partition(std::move(rows));
}

/// Value of a cumulative function obtained through the zigzag limit, with a
/// resolution-derived error bound. The bound stacks the largest successive
/// difference on a doubling resolution ladder with a 2/n grid term, clamped
/// so that value +- error_bound stays inside [0, 1]; it is an engineering
/// estimate, not a proven modulus.
struct CdfEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  int resolution = 0;
  bool converged = true;
};

namespace detail {

// Exact K(t) of the measure of profile(lambda) dilated by 1/n. Locations are
// integers over n, so the comparison with t is done in exact binary rational.
inline double inner_cdf(const Partition& lambda, int n, double t) {
  auto mu = transition_measure(profile_of(lambda));
  const Rational bound = Rational(t) * n;
  Rational s(0);
  for (const auto& a : mu.atoms())
    if (a.location <= bound) s += a.weight;
  return to_double(s);
}

}  // namespace detail

/// Transition measure of the inner zigzag at resolution n: exact residues of
/// the inner partition's profile, dilated by 1/n and rounded to double.
inline AtomicMeasure<double> inner_measure(const Diagram& d, int n) {
  auto mu = transition_measure(profile_of(inner_partition(d, n)));
  std::vector<MassAtom<double>> atoms;
  atoms.reserve(mu.atoms().size());
  for (const auto& a : mu.atoms())
    atoms.push_back({to_double(a.location) / n, to_double(a.weight)});
  return AtomicMeasure<double>(std::move(atoms));
}

/// K_d(t) through inner approximations at resolutions n_max/4, n_max/2 and
/// n_max. Per-resolution values are exact residue sums; only the ladder
/// extrapolation is heuristic. A ladder whose successive differences grow is
/// flagged as non-converged rather than rejected.
inline CdfEstimate cdf_continual(const Diagram& d, double t, int n_max) {
  if (n_max < 4) throw std::invalid_argument("cdf_continual needs n_max >= 4");
  const int ns[3] = {n_max / 4, n_max / 2, n_max};
  double v[3];
  for (int k = 0; k < 3; ++k) v[k] = detail::inner_cdf(inner_partition(d, ns[k]), ns[k], t);
  const double d1 = std::abs(v[1] - v[0]);
  const double d2 = std::abs(v[2] - v[1]);
  CdfEstimate out;
  out.value = v[2];
  out.error_bound =
      std::min(std::max(d1, d2) + 2.0 / n_max, std::min(out.value, 1.0 - out.value));
  out.resolution = n_max;
  out.converged = d2 <= d1 || d2 <= 2.0 / n_max;
  return out;
}

}  // namespace kerov
