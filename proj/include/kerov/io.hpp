#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kerov/approximation.hpp"
#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"
#include "kerov/measure.hpp"
#include "kerov/partition.hpp"
#include "kerov/shift.hpp"
#include "kerov/zigzag.hpp"

namespace kerov {

using nlohmann::json;

// Diagram files carry either {"breakpoints": [[u, v], ...]} for continual
// diagrams or {"partition": [r1, r2, ...]} for Young diagrams.

inline json to_json(const Diagram& d) {
  json bps = json::array();
  for (const auto& p : d.breakpoints()) bps.push_back({p.u, p.v});
  return json{{"breakpoints", bps}};
}

inline json to_json(const Partition& p) { return json{{"partition", p.rows()}}; }

inline Diagram diagram_from_json(const json& j) {
  if (j.contains("breakpoints")) {
    std::vector<BreakPoint<double>> pts;
    for (const auto& bp : j.at("breakpoints"))
      pts.push_back({bp.at(0).get<double>(), bp.at(1).get<double>()});
    return Diagram::from_breakpoints(std::move(pts));
  }
  if (j.contains("partition")) {
    Partition p(j.at("partition").get<std::vector<long long>>());
    return convert_diagram<double>(to_diagram(profile_of(p)));
  }
  throw std::invalid_argument("diagram JSON needs a 'breakpoints' or 'partition' key");
}

inline Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return diagram_from_json(j);
}

namespace detail {

// Rational components as JSON numbers when they fit 64 bits, decimal strings
// otherwise.
inline json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return json(x.template convert_to<long long>());
  return json(x.str());
}

}  // namespace detail

/// Exact mode: {"atoms": [[location, weight_num, weight_den], ...]}.
inline json to_json_exact(const AtomicMeasure<Rational>& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms()) {
    if (denominator(a.location) != 1)
      throw std::invalid_argument("exact measure serialization expects integer locations");
    json row = json::array();
    row.push_back(detail::integer_to_json(numerator(a.location)));
    row.push_back(detail::integer_to_json(numerator(a.weight)));
    row.push_back(detail::integer_to_json(denominator(a.weight)));
    atoms.push_back(std::move(row));
  }
  return json{{"atoms", atoms}};
}

/// Float mode: {"atoms": [[location, weight], ...]}.
inline json to_json(const AtomicMeasure<double>& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms()) atoms.push_back({a.location, a.weight});
  return json{{"atoms", atoms}};
}

inline json to_json(const CdfEstimate& e) {
  return json{{"value", e.value},
              {"error_bound", e.error_bound},
              {"resolution", e.resolution},
              {"converged", e.converged}};
}

template <class T>
json to_json(const BoundReport<T>& r) {
  return json{{"z_star", to_double(r.z_star)},
              {"bound_value", to_double(r.bound_value)},
              {"side", r.side == BoundSide::upper ? "upper" : "lower"},
              {"epsilon", to_double(r.epsilon)},
              {"z0", to_double(r.z0)}};
}

/// All CSV floats carry 17 significant digits so re-runs diff clean.
inline std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace kerov
