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

#pragma once

#include <cstddef>
#include <cstdint>
#include <future>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "weakgiant/degdist.hpp"
#include "weakgiant/evolution.hpp"

namespace weakgiant {

struct DirectedMultigraph {
  std::size_t vertex_count = 0;
  // (source, target); multi-edges kept with multiplicity.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct ConfigurationSample {
  DirectedMultigraph graph;
  // Vertices whose degree was redrawn to bring sum(n) and sum(k) together.
  std::size_t redrawn_vertices = 0;
  // Surplus stubs deleted after redrawing could not balance exactly.
  std::size_t deleted_stubs = 0;
};

/// Directed configuration model.
///
/// Degrees are drawn i.i.d. from d. The stub imbalance is then reduced by
/// redrawing the degrees of uniformly chosen vertices (a redraw is kept only
/// if it shrinks |sum n - sum k|); whatever imbalance survives 10^4
/// consecutive rejected redraws is removed by deleting uniformly chosen
/// surplus stubs. In-stubs are finally matched to out-stubs by a uniform
/// random permutation. Self-loops and multi-edges are kept.
ConfigurationSample sample_configuration_detailed(const BivariateDegreeDist& d,
                                                  std::size_t vertex_count, std::uint64_t seed,
                                                  double balance_tol = kBalanceTol);
DirectedMultigraph sample_configuration(const BivariateDegreeDist& d, std::size_t vertex_count,
                                        std::uint64_t seed, double balance_tol = kBalanceTol);

struct KmcStop {
  enum class Kind { kTime, kConversion, kExhaustion };
  Kind kind = Kind::kExhaustion;
  double value = 0.0;

  static KmcStop at_time(double t) { return {Kind::kTime, t}; }
  // Fraction of the initial in-spots converted into edges.
  static KmcStop at_conversion(double c_n) { return {Kind::kConversion, c_n}; }
  static KmcStop exhaustion() { return {Kind::kExhaustion, 0.0}; }
};

struct KmcOptions {
  // Record (t, mu_hat) every `trajectory_stride` events; 0 picks N / 1000.
  std::size_t trajectory_stride = 0;
  // Recompute spot counts and degree bounds after every event (O(N) each).
  bool verify_invariants = false;
};

struct TrajectoryPoint {
  double t = 0.0;
  double mu_hat = 0.0;
};

struct KmcResult {
  DirectedMultigraph graph;
  std::vector<TrajectoryPoint> trajectory;
  BivariateDegreeDist empirical;
  FullDegreeState empirical_full;
  double t = 0.0;
  std::size_t events = 0;
  double mu_hat = 0.0;
  // Converted fractions of the realized in- and out-spots.
  double conversion_in = 0.0;
  double conversion_out = 0.0;
  bool exhausted = false;
};

/// Kinetic simulation of the bounded-degree process.
///
/// Bounds are drawn i.i.d. from P. Every (vacant out-spot, vacant in-spot)
/// pair on two distinct vertices fires at rate 1/N, so the total rate is
/// (V_out V_in - S) / N with S the number of same-vertex pairs. Each event
/// joins a uniformly chosen admissible pair with a directed edge from the
/// out-spot's vertex to the in-spot's vertex. Throws kExhausted if no
/// admissible pair is left before a time or conversion target is reached.
KmcResult kmc_simulate(const BoundDist& bounds, std::size_t vertex_count, std::uint64_t seed,
                       KmcStop stop, const KmcOptions& options = {});

// Sizes of the weak components, largest first; they sum to vertex_count.
std::vector<std::size_t> weak_component_sizes(const DirectedMultigraph& g);
double largest_weak_fraction(const DirectedMultigraph& g);

// Law of component sizes. vertex_weighted: bin s holds s * count(s) / sum of
// sizes (the size of the component containing a uniform vertex); otherwise
// count(s) / number of components.
UnivariateDegreeDist size_histogram(std::span<const std::size_t> sizes, bool vertex_weighted);

// First line N, then one "src dst" line per edge.
void write_graph(std::ostream& out, const DirectedMultigraph& g);
// Header "# t\tmu_hat".
void write_trajectory(std::ostream& out, std::span<const TrajectoryPoint> trajectory);

std::uint64_t replica_seed(std::uint64_t master_seed, std::uint64_t replica);

// Runs fn(replica_seed(master, i)) for i in [0, count) on worker threads and
// returns the results in replica order.
template <typename Fn>
auto run_replicas(std::size_t count, std::uint64_t master_seed, Fn fn)
    -> std::vector<decltype(fn(std::uint64_t{}))> {
  using Result = decltype(fn(std::uint64_t{}));
  std::vector<std::future<Result>> futures;
  futures.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    futures.push_back(std::async(std::launch::async, fn, replica_seed(master_seed, i)));
  }
  std::vector<Result> results;
  results.reserve(count);
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace weakgiant
