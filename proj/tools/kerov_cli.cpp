// Command-line front end: transition measures, cumulative-function
// estimates, the projection metric, shift bounds, the growth-process oracle,
// and the convergence-rate experiment tables.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kerov/io.hpp"
#include "kerov/kerov.hpp"

namespace {

using namespace kerov;

Partition parse_partition(const std::string& spec) {
  std::vector<long long> rows;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) rows.push_back(std::stoll(item));
  }
  return Partition(std::move(rows));
}

std::vector<double> parse_doubles(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

int run_transition(const std::string& partition_spec, const std::string& format) {
  Partition p = parse_partition(partition_spec);
  auto mu = transition_measure(profile_of(p));
  if (format == "json") {
    std::cout << to_json_exact(mu).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "location,weight_num,weight_den\n";
    for (const auto& a : mu.atoms())
      std::cout << numerator(a.location) << "," << numerator(a.weight) << ","
                << denominator(a.weight) << "\n";
  } else {
    throw std::runtime_error("unknown format: " + format);
  }
  return 0;
}

int run_cdf(const std::string& diagram_path, double t, int nmax) {
  auto d = load_diagram(diagram_path);
  std::cout << to_json(cdf_continual(d, t, nmax)).dump(2) << "\n";
  return 0;
}

int run_metric(const std::string& a_path, const std::string& b_path) {
  std::cout << format_float(distance(load_diagram(a_path), load_diagram(b_path))) << "\n";
  return 0;
}

int run_bound(const std::string& omega_path, double z0, double eps, const std::string& side,
              int nmax) {
  auto omega = load_diagram(omega_path);
  std::optional<BoundReport<double>> rep;
  if (side == "upper")
    rep = upper_bound_cdf(omega, z0, eps, nmax);
  else if (side == "lower")
    rep = lower_bound_cdf(omega, z0, eps, nmax);
  else
    throw std::runtime_error("side must be upper or lower");
  if (!rep) {
    std::cout << json{{"side", side}, {"z0", z0}, {"epsilon", eps}, {"solution", nullptr}}.dump(2)
              << "\n";
    return 1;
  }
  std::cout << to_json(*rep).dump(2) << "\n";
  return 0;
}

void for_each_partition_of(long long n, std::vector<long long>& stack,
                           const std::function<void(const Partition&)>& fn) {
  if (n == 0) {
    fn(Partition(stack));
    return;
  }
  long long cap = stack.empty() ? n : std::min(n, stack.back());
  for (long long first = cap; first >= 1; --first) {
    stack.push_back(first);
    for_each_partition_of(n - first, stack, fn);
    stack.pop_back();
  }
}

int run_growth_check(int max_n) {
  for (long long n = 0; n <= max_n; ++n) {
    bool bad = false;
    Partition witness;
    std::vector<long long> stack;
    for_each_partition_of(n, stack, [&](const Partition& p) {
      if (bad) return;
      if (!(growth_probabilities(p) == transition_measure(profile_of(p)))) {
        bad = true;
        witness = p;
      }
    });
    if (bad) {
      std::cout << "MISMATCH " << json{{"partition", witness.rows()}}.dump() << "\n";
      return 1;
    }
  }
  std::cout << "OK\n";
  return 0;
}

int run_growth_sample(int steps, std::uint64_t seed) {
  std::cout << json{{"rng", kRngAlgorithm}, {"seed", seed}, {"steps", steps}}.dump() << "\n";
  auto traj = sample_growth(steps, seed);
  for (std::size_t k = 0; k < traj.size(); ++k)
    std::cout << json{{"step", k}, {"partition", traj[k].rows()}}.dump() << "\n";
  return 0;
}

int run_staircase_rate(int nmax, double a0, double b0, int grid, const std::string& out_path) {
  std::vector<int> Ns;
  for (int N = 1; N <= nmax; ++N) Ns.push_back(N);
  auto rows = staircase_rate_table(Ns, a0, b0, grid);
  auto out = open_out(out_path);
  out << "N,n,sup_error,scaled_error\n";
  for (const auto& r : rows)
    out << r.N << "," << r.n << "," << format_float(r.sup_error) << ","
        << format_float(r.scaled_error) << "\n";
  std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return 0;
}

int run_theorem_sweep(const std::string& omega_spec, const std::string& eps_spec, int samples,
                      std::uint64_t seed, const std::string& z0_spec,
                      const std::string& out_path) {
  if (omega_spec != "triangle")
    throw std::runtime_error("theorem-sweep supports --omega triangle");
  auto sweep = theorem_sweep(triangle_diagram(), samples, parse_doubles(eps_spec),
                             parse_doubles(z0_spec), seed);
  auto out = open_out(out_path);
  out << "epsilon,z0,sample,k_left,k_right,upper,lower,margin_upper,margin_lower,"
         "term_corner,term_window,term_tail\n";
  for (const auto& r : sweep.rows)
    out << format_float(r.epsilon) << "," << format_float(r.z0) << "," << r.sample << ","
        << format_float(r.k_left) << "," << format_float(r.k_right) << ","
        << format_float(r.upper) << "," << format_float(r.lower) << ","
        << format_float(r.margin_upper) << "," << format_float(r.margin_lower) << ","
        << format_float(r.term_corner) << "," << format_float(r.term_window) << ","
        << format_float(r.term_tail) << "\n";
  std::cout << json{{"violations", sweep.violations},
                    {"delta", sweep.delta},
                    {"rho_max", sweep.rho_max},
                    {"max_envelope_ratio", sweep.max_envelope_ratio},
                    {"rows", sweep.rows.size()},
                    {"out", out_path}}
                   .dump(2)
            << "\n";
  return sweep.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transition measures of Young and continual diagrams"};
  app.require_subcommand(1);

  std::string partition_spec, format = "json";
  auto* transition = app.add_subcommand("transition", "Exact transition measure of a partition");
  transition->add_option("--partition", partition_spec, "rows, e.g. 4,2,2,2")->required();
  transition->add_option("--format", format, "json or csv");

  std::string diagram_path;
  double t_value = 0.0;
  int nmax = 256;
  auto* cdf = app.add_subcommand("cdf", "Cumulative function of a continual diagram");
  cdf->add_option("--diagram", diagram_path, "diagram JSON file")->required();
  cdf->add_option("--t", t_value, "evaluation point")->required();
  cdf->add_option("--nmax", nmax, "finest inner-approximation resolution");

  std::string a_path, b_path;
  auto* metric = app.add_subcommand("metric", "Projection metric between two diagrams");
  metric->add_option("--a", a_path)->required();
  metric->add_option("--b", b_path)->required();

  std::string omega_path, side = "upper";
  double z0 = 0.0, eps = 0.0;
  int bound_nmax = 256;
  auto* bound = app.add_subcommand("bound", "Cumulative-function bound over an eps-ball");
  bound->add_option("--omega", omega_path, "reference diagram JSON")->required();
  bound->add_option("--z0", z0)->required();
  bound->add_option("--eps", eps)->required();
  bound->add_option("--side", side, "upper or lower");
  bound->add_option("--nmax", bound_nmax, "resolution when omega is not a zigzag");

  int max_n = 10;
  auto* growth_check = app.add_subcommand(
      "growth-check", "Compare growth probabilities with residue measures");
  growth_check->add_option("--max-n", max_n, "largest box count");

  int steps = 10;
  std::uint64_t seed = 1;
  auto* growth_sample = app.add_subcommand("growth-sample", "Sample one growth trajectory");
  growth_sample->add_option("--steps", steps)->required();
  growth_sample->add_option("--seed", seed)->required();

  int rate_nmax = 200, grid = 401;
  double a0 = -1.0, b0 = 1.0;
  std::string out_path = "rates.csv";
  auto* rate = app.add_subcommand(
      "staircase-rate",
      "CSV columns: N, n = N(N+1)/2, sup_error = sup over the window of "
      "|K_staircase - K_arcsine|, scaled_error = N*sup_error");
  rate->add_option("--nmax", rate_nmax, "table runs N = 1..nmax");
  rate->add_option("--a0", a0);
  rate->add_option("--b0", b0);
  rate->add_option("--grid", grid, "uniform grid points (atoms are always added)");
  rate->add_option("--out", out_path)->required();

  std::string sweep_omega = "triangle", eps_list = "0.05", z0_list = "-0.5,0,0.5";
  int sweep_samples = 100;
  std::uint64_t sweep_seed = 7;
  std::string sweep_out = "sweep.csv";
  auto* sweep = app.add_subcommand(
      "theorem-sweep",
      "CSV columns: epsilon, z0, sample, k_left/k_right (exact CDF of the "
      "sampled diagram at z0- and z0), upper/lower (ball bounds), "
      "margin_upper = upper - k_left, margin_lower = k_right - lower, "
      "term_corner/term_window/term_tail (three-term bound decomposition)");
  sweep->add_option("--omega", sweep_omega, "reference diagram (triangle)");
  sweep->add_option("--eps", eps_list, "comma-separated radii");
  sweep->add_option("--samples", sweep_samples, "ball samples per (eps, z0)");
  sweep->add_option("--seed", sweep_seed);
  sweep->add_option("--z0", z0_list, "comma-separated evaluation points");
  sweep->add_option("--out", sweep_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (transition->parsed()) return run_transition(partition_spec, format);
    if (cdf->parsed()) return run_cdf(diagram_path, t_value, nmax);
    if (metric->parsed()) return run_metric(a_path, b_path);
    if (bound->parsed()) return run_bound(omega_path, z0, eps, side, bound_nmax);
    if (growth_check->parsed()) return run_growth_check(max_n);
    if (growth_sample->parsed()) return run_growth_sample(steps, seed);
    if (rate->parsed()) return run_staircase_rate(rate_nmax, a0, b0, grid, out_path);
    if (sweep->parsed())
      return run_theorem_sweep(sweep_omega, eps_list, sweep_samples, sweep_seed, z0_list,
                               sweep_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
