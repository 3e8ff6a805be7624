#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"

namespace kerov {

template <class T>
struct MassAtom {
  T location;
  T weight;
  friend bool operator==(const MassAtom& a, const MassAtom& b) {
    return a.location == b.location && a.weight == b.weight;
  }
};

namespace detail {
inline double mass_tolerance(double) { return 1e-12; }
inline Rational mass_tolerance(const Rational&) { return Rational(0); }
}  // namespace detail

/// Finite discrete probability measure: strictly increasing atom locations
/// with positive weights summing to one (exactly for rational builds).
template <class T>
class AtomicMeasure {
 public:
  explicit AtomicMeasure(std::vector<MassAtom<T>> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("measure needs at least one atom");
    T total = T(0);
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (!(atoms_[k].weight > T(0))) throw std::invalid_argument("atom weights must be positive");
      if (k > 0 && !(atoms_[k - 1].location < atoms_[k].location))
        throw std::invalid_argument("atom locations must be strictly increasing");
      total += atoms_[k].weight;
    }
    if (detail::abs_of(total - T(1)) > detail::mass_tolerance(T{}))
      throw std::invalid_argument("atom weights must sum to one");
  }

  const std::vector<MassAtom<T>>& atoms() const { return atoms_; }

  // K(t) = mu((-inf, t]), right-continuous.
  T cdf(const T& t) const {
    T s = T(0);
    for (const auto& a : atoms_) {
      if (a.location > t) break;
      s += a.weight;
    }
    return s;
  }

  // Left limit K(t-) = mu((-inf, t)).
  T cdf_left(const T& t) const {
    T s = T(0);
    for (const auto& a : atoms_) {
      if (a.location >= t) break;
      s += a.weight;
    }
    return s;
  }

  // mu((t, +inf)).
  T mass_above(const T& t) const { return T(1) - cdf(t); }

  T first_moment() const {
    T s = T(0);
    for (const auto& a : atoms_) s += a.location * a.weight;
    return s;
  }

  // Pushforward under x -> c x (the transition measure of a rescaled profile).
  AtomicMeasure dilated(const T& c) const {
    if (!(c > T(0))) throw std::invalid_argument("dilation factor must be positive");
    std::vector<MassAtom<T>> out = atoms_;
    for (auto& a : out) a.location = c * a.location;
    return AtomicMeasure(std::move(out));
  }

  // Pushforward under x -> -x (the transition measure of the transpose).
  AtomicMeasure reflected() const {
    std::vector<MassAtom<T>> out;
    out.reserve(atoms_.size());
    for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it)
      out.push_back({-it->location, it->weight});
    return AtomicMeasure(std::move(out));
  }

  template <class F>
  auto integrate(F&& f) const {
    auto s = f(atoms_.front().location) * atoms_.front().weight;
    for (std::size_t k = 1; k < atoms_.size(); ++k)
      s = s + f(atoms_[k].location) * atoms_[k].weight;
    return s;
  }

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  std::vector<MassAtom<T>> atoms_;
};

template <class To, class From>
AtomicMeasure<To> convert_measure(const AtomicMeasure<From>& m) {
  if constexpr (std::is_same_v<To, From>) {
    return m;
  } else {
    std::vector<MassAtom<To>> atoms;
    atoms.reserve(m.atoms().size());
    for (const auto& a : m.atoms())
      atoms.push_back({static_cast<To>(to_double(a.location)), static_cast<To>(to_double(a.weight))});
    return AtomicMeasure<To>(std::move(atoms));
  }
}

}  // namespace kerov
