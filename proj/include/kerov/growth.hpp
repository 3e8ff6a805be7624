#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kerov/arithmetic.hpp"
#include "kerov/measure.hpp"
#include "kerov/partition.hpp"
#include "kerov/rng.hpp"

namespace kerov {

namespace detail {

inline std::vector<long long> column_heights(const Partition& p) {
  std::vector<long long> cols(p.empty() ? 0 : static_cast<std::size_t>(p.rows().front()), 0);
  for (long long r : p.rows())
    for (long long c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
  return cols;
}

}  // namespace detail

/// Hook length of the cell in row j, column i (both 1-indexed):
/// arm + leg + 1.
inline long long hook_length(const Partition& p, const std::vector<long long>& cols,
                             std::size_t j, std::size_t i) {
  return p.rows()[j - 1] - static_cast<long long>(i) + cols[i - 1] -
         static_cast<long long>(j) + 1;
}

/// Dimension of the irreducible symmetric-group representation indexed by p,
/// via the hook-length formula f = n! / prod(hooks). Exact.
inline Integer dimension(const Partition& p) {
  if (p.empty()) return 1;
  const auto cols = detail::column_heights(p);
  Integer hooks = 1;
  for (std::size_t j = 1; j <= p.row_count(); ++j)
    for (long long i = 1; i <= p.rows()[j - 1]; ++i)
      hooks *= hook_length(p, cols, j, static_cast<std::size_t>(i));
  Integer num = factorial(static_cast<unsigned>(p.box_count()));
  Integer q, r;
  boost::multiprecision::divide_qr(num, hooks, q, r);
  if (r != 0) throw std::logic_error("hook product does not divide n!");
  return q;
}

/// Markov kernel of the Plancherel growth process: an atom at the content of
/// each addable corner with probability f(mu) / ((n+1) f(lambda)).
///
/// Adding a box only changes the hooks in its row and column, so the ratio
/// of dimensions collapses to prod h / (h + 1) over those cells. This stays
/// entirely inside the hook-length formula; the equality with the residue
/// weights of the profile is a theorem, and the test suite checks it.
inline AtomicMeasure<Rational> growth_probabilities(const Partition& p) {
  const auto& rows = p.rows();
  const auto cols = detail::column_heights(p);
  std::vector<MassAtom<Rational>> atoms;
  for (std::size_t j = 1; j <= rows.size() + 1; ++j) {
    long long len = j <= rows.size() ? rows[j - 1] : 0;
    long long above_cap = j == 1 ? (1LL << 62) : rows[j - 2];
    if (len >= above_cap) continue;  // not addable
    const long long new_col = len + 1;
    Rational w(1);
    // Cells left of the new box in its row.
    for (long long i = 1; i <= len; ++i) {
      long long h = hook_length(p, cols, j, static_cast<std::size_t>(i));
      w *= Rational(h, h + 1);
    }
    // Cells below the new box in its column.
    for (std::size_t jj = 1; jj < j; ++jj) {
      long long h = hook_length(p, cols, jj, static_cast<std::size_t>(new_col));
      w *= Rational(h, h + 1);
    }
    atoms.push_back({Rational(new_col - static_cast<long long>(j)), w});
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const MassAtom<Rational>& a, const MassAtom<Rational>& b) {
              return a.location < b.location;
            });
  return AtomicMeasure<Rational>(std::move(atoms));
}

/// One Plancherel growth trajectory, empty diagram first. Deterministic in
/// the seed; the generator is splitmix64 with exact cumulative-weight
/// inversion, so results are identical across platforms.
inline std::vector<Partition> sample_growth(int steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("sample_growth needs steps >= 0");
  SplitMix64 rng(seed);
  std::vector<Partition> trajectory{Partition{}};
  for (int s = 0; s < steps; ++s) {
    const Partition& cur = trajectory.back();
    auto probs = growth_probabilities(cur);
    const Rational target(Integer(rng.next()), Integer(1) << 64);
    Rational acc(0);
    long long content = probs.atoms().back().location.template convert_to<long long>();
    for (const auto& a : probs.atoms()) {
      acc += a.weight;
      if (target < acc) {
        content = a.location.template convert_to<long long>();
        break;
      }
    }
    trajectory.push_back(add_box_at_content(cur, content));
  }
  return trajectory;
}

}  // namespace kerov
