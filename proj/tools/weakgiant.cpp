// Copyright 2026 The weakgiant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weakgiant/criteria.hpp"
#include "weakgiant/error.hpp"
#include "weakgiant/evolution.hpp"
#include "weakgiant/flory.hpp"
#include "weakgiant/gfsolver.hpp"
#include "weakgiant/io.hpp"
#include "weakgiant/mcgraph.hpp"
#include "weakgiant/rng.hpp"

namespace wg = weakgiant;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNoConvergence = 4;
constexpr int kExitUnreachable = 5;

struct Globals {
  double tol = wg::kNormalizationTol;
  std::uint64_t seed = wg::kDefaultSeed;
  std::string out = "-";
};

int exit_code(wg::ErrorKind kind) {
  switch (kind) {
    case wg::ErrorKind::kParse:
      return kExitParse;
    case wg::ErrorKind::kNoConvergence:
      return kExitNoConvergence;
    case wg::ErrorKind::kConversionOutOfRange:
    case wg::ErrorKind::kExhausted:
      return kExitUnreachable;
    default:
      return kExitValidation;
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const wg::MomentSet& m) {
  return {{"mu00", m.mu00}, {"mu10", m.mu10}, {"mu01", m.mu01},
          {"mu11", m.mu11}, {"mu20", m.mu20}, {"mu02", m.mu02}};
}

json to_json(const wg::ConnectivityReport& r) {
  return {{"moments", to_json(r.moments)},
          {"determinant_D", r.determinant_D},
          {"paper_A", r.paper_A},
          {"giant_weak", r.giant_weak},
          {"giant_in_out", r.giant_in_out},
          {"giant_undirected_projection", r.giant_undirected_projection},
          {"mean_weak_size", optional_number(r.mean_weak_size)},
          {"giant_weak_fraction", optional_number(r.giant_weak_fraction)}};
}

// [[n, k, prob], ...] in key order.
json to_json(const wg::BivariateDegreeDist& d) {
  json rows = json::array();
  for (const auto& [key, prob] : d.entries()) rows.push_back({key.first, key.second, prob});
  return rows;
}

// [[size, prob], ...]
json to_json(const wg::UnivariateDegreeDist& d) {
  json rows = json::array();
  for (const auto& [size, prob] : d.entries()) rows.push_back({size, prob});
  return rows;
}

json to_json(const wg::TransitionClass& c) {
  return {{"class", std::string(wg::to_string(c.kind))},
          {"c_n_crit", optional_number(c.c_n_crit)},
          {"c_k_crit", optional_number(c.c_k_crit)},
          {"t_crit", optional_number(c.t_crit)}};
}

// Writes to --out, or standard output for "-".
void emit(const Globals& g, const std::string& text) {
  if (g.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw wg::Error(wg::ErrorKind::kInvalidArgument, "cannot write '" + g.out + "'");
  file << text;
}

void emit(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

wg::BivariateDegreeDist load_dist(const std::string& path, double tol) {
  return wg::BivariateDegreeDist::from_entries(wg::read_table_file(path), tol);
}

wg::BoundDist load_bounds(const std::string& path, double tol) {
  return wg::BoundDist::from_entries(wg::read_table_file(path), tol);
}

wg::SolverOptions solver_options(const Globals& g, long max_iter) {
  wg::SolverOptions opts;
  opts.max_iter = max_iter;
  opts.balance_tol = g.tol;
  return opts;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw wg::Error(wg::ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  fn(file);
}

struct AnalyzeArgs {
  std::string input;
};

void run_analyze(const Globals& g, const AnalyzeArgs& a) {
  const auto d = load_dist(a.input, g.tol);
  emit(g, to_json(wg::criteria_report(d, solver_options(g, 1'000'000))));
}

struct GfArgs {
  std::string input;
  int order = 100;
  long max_iter = 1'000'000;
};

void run_gf(const Globals& g, const GfArgs& a) {
  if (a.order < 1) throw wg::Error(wg::ErrorKind::kInvalidArgument, "--order must be >= 1");
  const auto d = load_dist(a.input, g.tol);
  const auto opts = solver_options(g, a.max_iter);
  const auto s = wg::interior_fixed_point(d, opts);
  const auto w = wg::weak_size_distribution(d, a.order, opts);
  json sizes = json::array();
  for (int i = 1; i <= a.order; ++i) sizes.push_back(w[i]);
  emit(g, json{{"s_in", s.s_in},
               {"s_out", s.s_out},
               {"giant_fraction", wg::giant_weak_fraction(d, opts)},
               {"iterations", s.iterations},
               {"residual", s.residual},
               {"size_distribution", sizes}});
}

struct EvolveArgs {
  std::string input;
  std::optional<double> at_time;
  std::optional<double> at_conversion;
  bool critical = false;
};

void run_evolve(const Globals& g, const EvolveArgs& a) {
  const auto p = load_bounds(a.input, g.tol);
  if (a.critical) {
    emit(g, to_json(wg::transition_class(p)));
    return;
  }
  wg::FullDegreeState state;
  if (a.at_time) {
    state = wg::degree_state_at(p, *a.at_time);
  } else {
    const double t = wg::time_of_conversion(p, *a.at_conversion);
    state = wg::degree_state_at_conversion(p, *a.at_conversion);
    state.t = t;
  }
  const auto marginal = wg::marginal_degree_dist(state);
  wg::SolverOptions opts = solver_options(g, 1'000'000);
  // The marginal is balanced analytically; allow for summation roundoff.
  opts.balance_tol = std::max(g.tol, 1e-10);
  emit(g, json{{"t", state.t},
               {"mu", wg::mu_of_t(p, state.t)},
               {"c_n", state.c_n},
               {"c_k", state.c_k},
               {"marginal", to_json(marginal)},
               {"report", to_json(wg::criteria_report(marginal, opts))}});
}

struct FloryArgs {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  int n = 3;
  std::optional<double> p_A;
};

void run_flory(const Globals& g, const FloryArgs& a) {
  const wg::FloryMixture mix{a.f1, a.f2, a.f3, a.n};
  wg::validate(mix);
  const auto params = wg::flory_parameters(mix);
  const auto gel = wg::gel_conversion(mix);
  json j{{"alpha_c", params.alpha_c}, {"rho", params.rho}, {"r", params.r},
         {"c_n_crit", optional_number(gel)}};
  if (gel) {
    const auto point = wg::gel_point_pA(params);
    j["p_A_crit"] = point.p_A;
    j["p_B_crit"] = point.p_B;
  } else {
    j["p_A_crit"] = nullptr;
    j["p_B_crit"] = nullptr;
  }
  if (a.p_A) {
    if (!(*a.p_A >= 0.0 && *a.p_A <= 1.0)) {
      throw wg::Error(wg::ErrorKind::kInvalidArgument, "--pA must lie in [0, 1]");
    }
    j["alpha"] = wg::alpha_of(*a.p_A, params);
    j["gelled"] = wg::is_gelled(*a.p_A, params);
  } else {
    j["gelled"] = nullptr;
  }
  emit(g, j);
}

struct SimulateArgs {
  std::string mode = "config";
  std::string input;
  long long vertices = 100000;
  std::optional<double> t_end;
  std::optional<double> conversion;
  std::size_t replicas = 1;
  std::string graph_out;
  std::string trajectory_out;
};

json component_summary(const wg::DirectedMultigraph& graph) {
  const auto sizes = wg::weak_component_sizes(graph);
  return {{"edges", graph.edges.size()},
          {"components", sizes.size()},
          {"largest_weak_fraction",
           static_cast<double>(sizes.front()) / static_cast<double>(graph.vertex_count)},
          {"size_histogram", to_json(wg::size_histogram(sizes, true))}};
}

void run_simulate(const Globals& g, const SimulateArgs& a) {
  if (a.vertices < 1) throw wg::Error(wg::ErrorKind::kInvalidArgument, "--vertices must be >= 1");
  if (a.replicas < 1) throw wg::Error(wg::ErrorKind::kInvalidArgument, "--replicas must be >= 1");
  const auto n = static_cast<std::size_t>(a.vertices);
  json runs = json::array();
  std::optional<wg::DirectedMultigraph> first_graph;
  std::vector<wg::TrajectoryPoint> first_trajectory;

  if (a.mode == "config") {
    if (a.t_end || a.conversion || !a.trajectory_out.empty()) {
      throw wg::Error(wg::ErrorKind::kInvalidArgument, "stop flags and --trajectory-out need --mode kmc");
    }
    const auto d = load_dist(a.input, g.tol);
    auto samples = wg::run_replicas(a.replicas, g.seed, [&](std::uint64_t seed) {
      return wg::sample_configuration_detailed(d, n, seed, g.tol);
    });
    for (std::size_t i = 0; i < samples.size(); ++i) {
      json r = component_summary(samples[i].graph);
      r["seed"] = wg::replica_seed(g.seed, i);
      r["redrawn_vertices"] = samples[i].redrawn_vertices;
      r["deleted_stubs"] = samples[i].deleted_stubs;
      runs.push_back(std::move(r));
    }
    first_graph = std::move(samples.front().graph);
  } else {
    const auto p = load_bounds(a.input, g.tol);
    const wg::KmcStop stop = a.t_end        ? wg::KmcStop::at_time(*a.t_end)
                             : a.conversion ? wg::KmcStop::at_conversion(*a.conversion)
                                            : wg::KmcStop::exhaustion();
    auto results = wg::run_replicas(a.replicas, g.seed, [&](std::uint64_t seed) {
      return wg::kmc_simulate(p, n, seed, stop);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& res = results[i];
      json r = component_summary(res.graph);
      r["seed"] = wg::replica_seed(g.seed, i);
      r["t"] = res.t;
      r["events"] = res.events;
      r["mu_hat"] = res.mu_hat;
      r["conversion_in"] = res.conversion_in;
      r["conversion_out"] = res.conversion_out;
      r["exhausted"] = res.exhausted;
      r["empirical"] = to_json(res.empirical);
      runs.push_back(std::move(r));
    }
    first_graph = std::move(results.front().graph);
    first_trajectory = std::move(results.front().trajectory);
  }

  double mean_fraction = 0.0;
  for (const auto& r : runs) mean_fraction += r["largest_weak_fraction"].get<double>();
  mean_fraction /= static_cast<double>(runs.size());

  if (!a.graph_out.empty()) {
    write_file(a.graph_out, [&](std::ostream& os) { wg::write_graph(os, *first_graph); });
  }
  if (!a.trajectory_out.empty()) {
    write_file(a.trajectory_out,
               [&](std::ostream& os) { wg::write_trajectory(os, first_trajectory); });
  }
  emit(g, json{{"mode", a.mode},
               {"vertices", n},
               {"seed", g.seed},
               {"mean_largest_weak_fraction", mean_fraction},
               {"replicas", runs}});
}

struct BarycentricArgs {
  std::vector<std::string> atoms;
  int resolution = 50;
};

wg::DegreeKey parse_atom(const std::string& text) {
  const auto comma = text.find(',');
  int n = 0;
  int k = 0;
  std::size_t used_n = 0;
  std::size_t used_k = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    n = std::stoi(a, &used_n);
    k = std::stoi(b, &used_k);
    if (used_n != a.size() || used_k != b.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw wg::Error(wg::ErrorKind::kParse, "bad atom '" + text + "', expected n_max,k_max");
  }
  if (n < 0 || k < 0) throw wg::Error(wg::ErrorKind::kNegativeIndex, "negative atom '" + text + "'");
  return {n, k};
}

void run_barycentric(const Globals& g, const BarycentricArgs& a) {
  std::array<wg::DegreeKey, 3> atoms;
  for (std::size_t i = 0; i < 3; ++i) atoms[i] = parse_atom(a.atoms[i]);
  const auto grid = wg::barycentric_grid(atoms, a.resolution);
  std::ostringstream os;
  wg::write_barycentric_tsv(os, grid);
  emit(g, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Giant weak components of directed random graphs and the bounded-degree process"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Normalization and edge-balance tolerance")
      ->default_val(g.tol)
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Master random seed")->default_val(g.seed);
  app.add_option("--out", g.out, "Output path, - for standard output")->default_val(g.out);
  app.fallthrough();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Giant-component criteria of a degree table");
  analyze_cmd->add_option("input", analyze.input, "Degree table `n k prob`, - for stdin")->required();

  GfArgs gf;
  auto* gf_cmd = app.add_subcommand("gf", "Weak-component size law and giant fraction");
  gf_cmd->add_option("input", gf.input, "Degree table `n k prob`, - for stdin")->required();
  gf_cmd->add_option("--order", gf.order, "Largest component size reported")->default_val(gf.order);
  gf_cmd->add_option("--max-iter", gf.max_iter, "Fixed-point iteration limit")
      ->default_val(gf.max_iter);

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Bounded-degree process at an instant");
  evolve_cmd->add_option("input", evolve.input, "Bound table `n_max k_max prob`, - for stdin")
      ->required();
  auto* target = evolve_cmd->add_option_group("target", "Exactly one of");
  target->add_option("--at-time", evolve.at_time, "Time t >= 0");
  target->add_option("--at-conversion", evolve.at_conversion, "In-spot conversion c_n");
  target->add_flag("--critical", evolve.critical, "Transition class and point");
  target->require_option(1);

  FloryArgs flory;
  auto* flory_cmd = app.add_subcommand("flory", "Flory-Stockmayer gel point of an A-A/B-B/A_n mixture");
  flory_cmd->add_option("--f1", flory.f1, "Fraction of A-A units")->required();
  flory_cmd->add_option("--f2", flory.f2, "Fraction of B-B units")->required();
  flory_cmd->add_option("--f3", flory.f3, "Fraction of A_n units")->required();
  flory_cmd->add_option("--n", flory.n, "Functionality of the branched unit")->required();
  flory_cmd->add_option("--pA", flory.p_A, "Extent of reaction of A groups");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo graph sampling");
  sim_cmd->add_option("--mode", sim.mode, "config (degree table) or kmc (bound table)")
      ->check(CLI::IsMember({"config", "kmc"}))
      ->default_val(sim.mode);
  sim_cmd->add_option("input", sim.input, "Input table, - for stdin")->required();
  sim_cmd->add_option("--vertices", sim.vertices, "Number of vertices")->default_val(sim.vertices);
  auto* t_end = sim_cmd->add_option("--t-end", sim.t_end, "KMC: stop at this time");
  auto* conv = sim_cmd->add_option("--conversion", sim.conversion,
                                   "KMC: stop at this in-spot conversion");
  t_end->excludes(conv);
  sim_cmd->add_option("--replicas", sim.replicas, "Independent replicas")->default_val(sim.replicas);
  sim_cmd->add_option("--graph-out", sim.graph_out, "Edge list of replica 0");
  sim_cmd->add_option("--trajectory-out", sim.trajectory_out, "KMC: (t, mu_hat) TSV of replica 0");

  BarycentricArgs bary;
  auto* bary_cmd = app.add_subcommand("barycentric", "Transition classes over a simplex of three bound atoms");
  bary_cmd->add_option("--atoms", bary.atoms, "Three atoms n_max,k_max")->required()->expected(3);
  bary_cmd->add_option("--resolution", bary.resolution, "Lattice points per edge")
      ->default_val(bary.resolution);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*analyze_cmd) run_analyze(g, analyze);
    if (*gf_cmd) run_gf(g, gf);
    if (*evolve_cmd) run_evolve(g, evolve);
    if (*flory_cmd) run_flory(g, flory);
    if (*sim_cmd) run_simulate(g, sim);
    if (*bary_cmd) run_barycentric(g, bary);
  } catch (const wg::Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", std::string(wg::to_string(e.kind())).c_str(),
                 e.what());
    return exit_code(e.kind());
  }
  return kExitOk;
}
