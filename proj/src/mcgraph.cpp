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

#include "weakgiant/mcgraph.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "weakgiant/disjoint_sets.hpp"
#include "weakgiant/error.hpp"
#include "weakgiant/rng.hpp"

namespace weakgiant {
namespace {

constexpr int kMaxConsecutiveRejectedRedraws = 10000;

// Inverse-CDF sampler over the atoms of a table.
class AtomSampler {
 public:
  explicit AtomSampler(const BivariateDegreeDist& d) {
    double acc = 0.0;
    for (const auto& [key, prob] : d.entries()) {
      acc += prob;
      keys_.push_back(key);
      cumulative_.push_back(acc);
    }
  }

  DegreeKey operator()(Rng& rng) const {
    const double u = rng.uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return keys_[static_cast<std::size_t>(it - cumulative_.begin())];
  }

 private:
  std::vector<DegreeKey> keys_;
  std::vector<double> cumulative_;
};

template <typename T>
void swap_remove(std::vector<T>& v, std::size_t index) {
  v[index] = v.back();
  v.pop_back();
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

void require_vertex_id_range(std::size_t vertex_count) {
  if (vertex_count > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::kInvalidArgument, "vertex count exceeds 32-bit ids");
  }
}

}  // namespace

ConfigurationSample sample_configuration_detailed(const BivariateDegreeDist& d,
                                                  std::size_t vertex_count, std::uint64_t seed,
                                                  double balance_tol) {
  require_edge_balance(d, balance_tol);
  if (vertex_count < 1) throw Error(ErrorKind::kInvalidArgument, "vertex count must be >= 1");
  require_vertex_id_range(vertex_count);

  Rng rng(seed);
  const AtomSampler draw(d);
  std::vector<DegreeKey> degrees(vertex_count);
  long long imbalance = 0;  // sum n - sum k
  for (auto& deg : degrees) {
    deg = draw(rng);
    imbalance += deg.first - deg.second;
  }

  ConfigurationSample sample;
  int rejected = 0;
  while (imbalance != 0 && rejected < kMaxConsecutiveRejectedRedraws) {
    const std::size_t v = rng.below(vertex_count);
    const DegreeKey proposal = draw(rng);
    const long long next = imbalance - (degrees[v].first - degrees[v].second) +
                           (proposal.first - proposal.second);
    if (std::llabs(next) < std::llabs(imbalance)) {
      degrees[v] = proposal;
      imbalance = next;
      ++sample.redrawn_vertices;
      rejected = 0;
    } else {
      ++rejected;
    }
  }

  std::vector<std::uint32_t> in_stubs;
  std::vector<std::uint32_t> out_stubs;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    in_stubs.insert(in_stubs.end(), static_cast<std::size_t>(degrees[v].first),
                    static_cast<std::uint32_t>(v));
    out_stubs.insert(out_stubs.end(), static_cast<std::size_t>(degrees[v].second),
                     static_cast<std::uint32_t>(v));
  }
  auto& surplus = imbalance > 0 ? in_stubs : out_stubs;
  for (long long i = 0; i < std::llabs(imbalance); ++i) {
    swap_remove(surplus, rng.below(surplus.size()));
    ++sample.deleted_stubs;
  }
  if (in_stubs.size() != out_stubs.size()) {
    throw Error(ErrorKind::kUnrealizable, "stub counts differ after repair");
  }

  shuffle(in_stubs, rng);
  sample.graph.vertex_count = vertex_count;
  sample.graph.edges.reserve(out_stubs.size());
  for (std::size_t i = 0; i < out_stubs.size(); ++i) {
    sample.graph.edges.emplace_back(out_stubs[i], in_stubs[i]);
  }
  return sample;
}

DirectedMultigraph sample_configuration(const BivariateDegreeDist& d, std::size_t vertex_count,
                                        std::uint64_t seed, double balance_tol) {
  return sample_configuration_detailed(d, vertex_count, seed, balance_tol).graph;
}

namespace {

struct VertexState {
  int n = 0;
  int k = 0;
  int n_max = 0;
  int k_max = 0;
};

void verify_kmc_state(const std::vector<VertexState>& vertices,
                      const std::vector<std::uint32_t>& vacant_in,
                      const std::vector<std::uint32_t>& vacant_out, std::uint64_t same_vertex_pairs,
                      std::size_t events) {
  std::uint64_t in_total = 0;
  std::uint64_t out_total = 0;
  std::uint64_t vacant_in_total = 0;
  std::uint64_t vacant_out_total = 0;
  std::uint64_t pairs = 0;
  for (const VertexState& v : vertices) {
    if (v.n < 0 || v.n > v.n_max || v.k < 0 || v.k > v.k_max) {
      throw std::logic_error("vertex degree outside its bounds");
    }
    in_total += v.n;
    out_total += v.k;
    vacant_in_total += v.n_max - v.n;
    vacant_out_total += v.k_max - v.k;
    pairs += static_cast<std::uint64_t>(v.n_max - v.n) * (v.k_max - v.k);
  }
  if (in_total != events || out_total != events) {
    throw std::logic_error("edge ends do not match the event count");
  }
  if (vacant_in_total != vacant_in.size() || vacant_out_total != vacant_out.size() ||
      pairs != same_vertex_pairs) {
    throw std::logic_error("incremental spot bookkeeping drifted");
  }
}

}  // namespace

KmcResult kmc_simulate(const BoundDist& bounds, std::size_t vertex_count, std::uint64_t seed,
                       KmcStop stop, const KmcOptions& options) {
  if (vertex_count < 2) throw Error(ErrorKind::kInvalidArgument, "KMC needs at least 2 vertices");
  require_vertex_id_range(vertex_count);
  if (stop.kind != KmcStop::Kind::kExhaustion && !(stop.value >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "stop target must be nonnegative");
  }

  Rng rng(seed);
  const AtomSampler draw(bounds.table());
  std::vector<VertexState> vertices(vertex_count);
  std::vector<std::uint32_t> vacant_in;
  std::vector<std::uint32_t> vacant_out;
  std::uint64_t same_vertex_pairs = 0;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const auto [n_max, k_max] = draw(rng);
    vertices[v].n_max = n_max;
    vertices[v].k_max = k_max;
    vacant_in.insert(vacant_in.end(), static_cast<std::size_t>(n_max),
                     static_cast<std::uint32_t>(v));
    vacant_out.insert(vacant_out.end(), static_cast<std::size_t>(k_max),
                      static_cast<std::uint32_t>(v));
    same_vertex_pairs += static_cast<std::uint64_t>(n_max) * k_max;
  }
  const std::size_t in_spots = vacant_in.size();
  const std::size_t out_spots = vacant_out.size();
  const double n = static_cast<double>(vertex_count);

  DirectedMultigraph graph;
  graph.vertex_count = vertex_count;
  std::vector<TrajectoryPoint> trajectory;
  bool exhausted = false;
  const std::size_t stride =
      options.trajectory_stride > 0 ? options.trajectory_stride : std::max<std::size_t>(1, vertex_count / 1000);
  trajectory.push_back({0.0, 0.0});

  double t = 0.0;
  std::size_t events = 0;
  for (;;) {
    if (stop.kind == KmcStop::Kind::kConversion &&
        static_cast<double>(events) >= stop.value * static_cast<double>(in_spots)) {
      break;
    }
    const std::uint64_t admissible =
        static_cast<std::uint64_t>(vacant_out.size()) * vacant_in.size() - same_vertex_pairs;
    if (admissible == 0) {
      exhausted = true;
      if (stop.kind != KmcStop::Kind::kExhaustion) {
        throw Error(ErrorKind::kExhausted, "no admissible spot pair left after " +
                                               std::to_string(events) +
                                               " events, before the stop target");
      }
      break;
    }
    const double dt = rng.exponential(static_cast<double>(admissible) / n);
    if (stop.kind == KmcStop::Kind::kTime && t + dt > stop.value) {
      t = stop.value;
      break;
    }
    t += dt;

    std::size_t i = 0;
    std::size_t j = 0;
    do {
      i = rng.below(vacant_out.size());
      j = rng.below(vacant_in.size());
    } while (vacant_out[i] == vacant_in[j]);
    const std::uint32_t source = vacant_out[i];
    const std::uint32_t target = vacant_in[j];
    swap_remove(vacant_out, i);
    swap_remove(vacant_in, j);

    VertexState& src = vertices[source];
    VertexState& dst = vertices[target];
    same_vertex_pairs -= static_cast<std::uint64_t>(src.n_max - src.n);
    ++src.k;
    same_vertex_pairs -= static_cast<std::uint64_t>(dst.k_max - dst.k);
    ++dst.n;
    graph.edges.emplace_back(source, target);
    ++events;

    if (events % stride == 0) trajectory.push_back({t, events / n});
    if (options.verify_invariants) {
      verify_kmc_state(vertices, vacant_in, vacant_out, same_vertex_pairs, events);
    }
  }
  if (trajectory.back().mu_hat != events / n || trajectory.back().t != t) {
    trajectory.push_back({t, events / n});
  }

  std::map<DegreeKey, std::size_t> counts;
  std::map<std::array<int, 4>, std::size_t> full_counts;
  for (const VertexState& v : vertices) {
    ++counts[{v.n, v.k}];
    ++full_counts[{v.n, v.k, v.n_max, v.k_max}];
  }
  std::vector<DegreeEntry> entries;
  for (const auto& [key, count] : counts) entries.push_back({key.first, key.second, count / n});
  KmcResult result{std::move(graph), std::move(trajectory), BivariateDegreeDist::from_entries(entries), {}};
  result.t = t;
  result.events = events;
  result.mu_hat = events / n;
  result.conversion_in = in_spots > 0 ? static_cast<double>(events) / in_spots : 0.0;
  result.conversion_out = out_spots > 0 ? static_cast<double>(events) / out_spots : 0.0;
  result.exhausted = exhausted;
  for (const auto& [key, count] : full_counts) result.empirical_full.entries[key] = count / n;
  result.empirical_full.t = t;
  result.empirical_full.c_n = result.conversion_in;
  result.empirical_full.c_k = result.conversion_out;
  return result;
}

std::vector<std::size_t> weak_component_sizes(const DirectedMultigraph& g) {
  DisjointSets sets(g.vertex_count);
  for (const auto& [u, v] : g.edges) sets.unite(u, v);
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (sets.find(static_cast<std::uint32_t>(v)) == v) sizes.push_back(sets.size_of(v));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

double largest_weak_fraction(const DirectedMultigraph& g) {
  if (g.vertex_count == 0) throw Error(ErrorKind::kInvalidArgument, "graph has no vertices");
  const auto sizes = weak_component_sizes(g);
  return static_cast<double>(sizes.front()) / static_cast<double>(g.vertex_count);
}

UnivariateDegreeDist size_histogram(std::span<const std::size_t> sizes, bool vertex_weighted) {
  if (sizes.empty()) throw Error(ErrorKind::kInvalidArgument, "no component sizes");
  std::map<int, std::size_t> counts;
  std::size_t total_vertices = 0;
  for (std::size_t s : sizes) {
    ++counts[static_cast<int>(s)];
    total_vertices += s;
  }
  std::vector<std::pair<int, double>> entries;
  for (const auto& [s, count] : counts) {
    const double weight = vertex_weighted
                              ? static_cast<double>(s) * count / static_cast<double>(total_vertices)
                              : static_cast<double>(count) / static_cast<double>(sizes.size());
    if (weight > 0.0) entries.emplace_back(s, weight);
  }
  return UnivariateDegreeDist::from_entries(entries);
}

void write_graph(std::ostream& out, const DirectedMultigraph& g) {
  out << g.vertex_count << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_trajectory(std::ostream& out, std::span<const TrajectoryPoint> trajectory) {
  out << "# t\tmu_hat\n";
  char buf[80];
  for (const TrajectoryPoint& p : trajectory) {
    std::snprintf(buf, sizeof buf, "%.17g\t%.17g\n", p.t, p.mu_hat);
    out << buf;
  }
}

std::uint64_t replica_seed(std::uint64_t master_seed, std::uint64_t replica) {
  return splitmix64(master_seed) ^ splitmix64(replica + 0x632be59bd9b4e019ULL);
}

}  // namespace weakgiant
