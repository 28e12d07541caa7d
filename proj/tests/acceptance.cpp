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

// Acceptance gate: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weakgiant/criteria.hpp"
#include "weakgiant/evolution.hpp"
#include "weakgiant/flory.hpp"
#include "weakgiant/gfsolver.hpp"
#include "weakgiant/mcgraph.hpp"
#include "weakgiant/rng.hpp"

using namespace weakgiant;

namespace {

// Collects individual checks of one criterion and a human-readable summary.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      failures_ << " [failed: " << what << "]";
    }
  }
  template <typename T>
  void note(const std::string& key, T value) {
    notes_ << ' ' << key << '=' << value;
  }
  bool ok() const { return ok_; }
  std::string summary() const { return notes_.str() + failures_.str(); }

 private:
  bool ok_ = true;
  std::ostringstream notes_;
  std::ostringstream failures_;
};

BoundDist bounds(std::vector<DegreeEntry> e) { return BoundDist::from_entries(e); }

void motif_law(Checks& c) {
  const auto d = oracle::motif();
  const auto r = criteria_report(d);
  c.note("D", r.determinant_D);
  c.expect(std::abs(r.determinant_D - 4.0 / 9.0) <= 1e-9, "D = 4/9");
  c.expect(!r.giant_weak, "no giant weak component");
  c.expect(r.mean_weak_size && std::abs(*r.mean_weak_size - 3.0) <= 1e-9, "mean size 3");
  const auto w = weak_size_distribution(d, 10);
  c.note("w3", w[3]);
  c.expect(std::abs(w[3] - 1.0) <= 1e-9, "w(3) = 1");
  const auto sizes = weak_component_sizes(sample_configuration(d, 300000, kDefaultSeed));
  const double mass3 = size_histogram(sizes, true).probability(3);
  c.note("mc_mass3", mass3);
  c.expect(mass3 >= 0.999, "MC mass in size-3 components >= 0.999");
}

void double_poisson_threshold(Checks& c) {
  const auto det = [](double lambda) {
    return criticality_determinant(oracle::double_poisson(lambda));
  };
  const double root = oracle::bisect(det, 0.3, 0.7, 1e-6);
  c.note("lambda_c", root);
  c.expect(det(0.3) > 0 && det(0.7) < 0, "bracketed sign change");
  c.expect(std::abs(root - 0.5) <= 1e-3, "threshold at 1/2");
  const double low = largest_weak_fraction(
      sample_configuration(oracle::double_poisson(0.45), 100000, kDefaultSeed));
  const double high = largest_weak_fraction(
      sample_configuration(oracle::double_poisson(0.6), 100000, kDefaultSeed + 1));
  c.note("mc_0.45", low);
  c.note("mc_0.6", high);
  c.expect(low < 0.02, "subcritical MC fraction < 0.02");
  c.expect(high > 0.05, "supercritical MC fraction > 0.05");
}

void bethe_gel_point(Checks& c) {
  const auto p = bounds({{2, 2, 1.0}});
  const auto crit = critical_conversion(p);
  c.expect(crit.has_value(), "critical conversion exists");
  if (crit) {
    c.note("c_crit", crit->c_n);
    c.expect(std::abs(crit->c_n - 1.0 / 3.0) <= 1e-12, "c_crit = 1/3");
  }
  const double low = largest_weak_fraction(
      kmc_simulate(p, 100000, kDefaultSeed, KmcStop::at_conversion(0.25)).graph);
  const double high = largest_weak_fraction(
      kmc_simulate(p, 100000, kDefaultSeed + 1, KmcStop::at_conversion(0.45)).graph);
  c.note("kmc_0.25", low);
  c.note("kmc_0.45", high);
  c.expect(low < 0.01, "KMC fraction < 0.01 at c = 0.25");
  c.expect(high > 0.05, "KMC fraction > 0.05 at c = 0.45");
}

void flory_stockmayer(Checks& c) {
  const FloryMixture mix{0.0, 0.6, 0.4, 3};
  const auto fp = flory_parameters(mix);
  const auto pa = gel_point_pA(fp);
  c.note("alpha_c", fp.alpha_c);
  c.note("p_A_crit", pa.p_A);
  c.expect(std::abs(fp.alpha_c - 0.5) <= 1e-15, "alpha_c = 1/2");
  c.expect(std::abs(pa.p_A - 1.0 / std::sqrt(2.0)) <= 1e-12, "p_A_crit = 1/sqrt 2");

  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> fn(2, 6);
  int checked = 0;
  double worst = 0.0;
  while (checked < 200) {
    const double a = u(rng);
    const double b = u(rng);
    const double s = a + b + u(rng);
    const FloryMixture m{a / s, b / s, 1.0 - a / s - b / s, fn(rng)};
    if (m.f3 < 0.0 || m.f2 <= 0.0 || m.f1 + m.f3 <= 0.0) continue;
    ++checked;
    const auto p = to_bound_dist(m);
    const auto crit = critical_conversion(p);
    const auto gel = gel_conversion(m);
    const bool finite = transition_class(p).kind == TransitionKind::kFiniteTime;
    if (!crit || gel.has_value() != finite) {
      c.expect(false, "gel conversion exists iff finite-time transition");
      continue;
    }
    worst = std::max(worst, std::abs(gel_threshold(m) - crit->c_n));
    if (gel) worst = std::max(worst, std::abs(*gel - crit->c_n));
  }
  c.note("mixtures", checked);
  c.note("max_diff", worst);
  c.expect(worst <= 1e-12, "gel conversion equals critical conversion");
}

void mu_closed_form(Checks& c) {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> nu(0.2, 6.0);
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < 24; ++i) pairs.emplace_back(nu(rng), nu(rng));
  for (double base : {0.7, 2.0, 4.5}) {
    pairs.emplace_back(base + 1e-6, base);
    pairs.emplace_back(base, base + 1e-6);
    pairs.emplace_back(base, base);
  }
  const int steps = 20000;
  double worst = 0.0;
  double printed_variant = 0.0;
  for (const auto& [nu10, nu01] : pairs) {
    NuMoments m;
    m.nu10 = nu10;
    m.nu01 = nu01;
    const auto ys = oracle::rk4([&](double x) { return (nu01 - x) * (nu10 - x); }, 0.0, 5.0, steps);
    for (int i = 1; i <= steps; ++i) {
      const double t = 5.0 * i / steps;
      worst = std::max(worst, std::abs(mu_of_t(m, t) - ys[i]) / ys[i]);
      if (nu10 == nu01) {
        const double alt = nu10 * nu10 * t / ((1 + nu10 * t) * (1 + nu10 * t));
        printed_variant = std::max(printed_variant, std::abs(alt - ys[i]) / ys[i]);
      }
    }
  }
  c.note("pairs", pairs.size());
  c.note("max_rel_err", worst);
  c.note("squared_denominator_err", printed_variant);
  c.expect(worst <= 1e-8, "closed form within 1e-8 of RK4");
  c.expect(printed_variant > 1e-2, "squared-denominator variant is rejected by RK4");
}

void degree_law_vs_kmc(Checks& c) {
  const auto p = bounds({{10, 10, 1.0 / 3}, {5, 10, 1.0 / 3}, {10, 4, 1.0 / 3}});
  const auto analytic = marginal_degree_dist(degree_state_at(p, 0.1));
  const auto r = kmc_simulate(p, 200000, kDefaultSeed, KmcStop::at_time(0.1));
  const double tv = oracle::total_variation(r.empirical.entries(), analytic.entries());
  c.note("tv", tv);
  c.expect(tv <= 0.02, "TV <= 0.02");

  double worst = 0.0;
  const double sup = conversion_sup(p).c_n;
  for (int i = 0; i <= 20; ++i) {
    const double cn = sup * i / 20;
    const auto closed = mu_moments_at(p, cn);
    const auto m = marginal_degree_dist(degree_state_at_conversion(p, cn));
    worst = std::max({worst, std::abs(closed.mu20 - oracle::brute_moment(m, 2, 0)),
                      std::abs(closed.mu02 - oracle::brute_moment(m, 0, 2)),
                      std::abs(closed.mu11 - oracle::brute_moment(m, 1, 1))});
  }
  c.note("moment_err", worst);
  c.expect(worst <= 1e-10, "closed-form moments within 1e-10");
}

void size_law_vs_mc(Checks& c) {
  const auto p = bounds({{2, 2, 1.0}});
  const int order = 30;
  const auto d = marginal_degree_dist(degree_state_at_conversion(p, 0.2));
  c.expect(criticality_determinant(d) > 0, "subcritical at c = 0.2");
  const auto w = weak_size_distribution(d, order);
  std::map<int, double> predicted;
  double mass = 0.0;
  for (int s = 1; s <= order; ++s) {
    predicted[s] = w[s];
    mass += w[s];
  }
  predicted[order + 1] = std::max(0.0, 1.0 - mass);
  const auto r = kmc_simulate(p, 100000, kDefaultSeed, KmcStop::at_conversion(0.2));
  const auto hist = size_histogram(weak_component_sizes(r.graph), true);
  const double tv = oracle::total_variation(oracle::with_tail_bin(hist.entries(), order), predicted);
  c.note("tv", tv);
  c.expect(tv <= 0.02, "TV <= 0.02");
}

void classifier_coherence(Checks& c) {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  int checked = 0;
  int finite = 0;
  int mismatches = 0;
  while (checked < 500) {
    std::map<DegreeKey, double> cells;
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double wgt = weight(rng);
      cells[{deg(rng), deg(rng)}] += wgt;
      total += wgt;
    }
    std::vector<DegreeEntry> e;
    bool in = false;
    bool out = false;
    for (const auto& [key, wgt] : cells) {
      e.push_back({key.first, key.second, wgt / total});
      in |= key.first > 0;
      out |= key.second > 0;
    }
    if (!in || !out) continue;
    ++checked;
    const auto p = BoundDist::from_entries(e);
    const auto crit = critical_conversion(p);
    const bool below = crit && crit->c_n < conversion_sup(p).c_n - 1e-10;
    const bool is_finite = transition_class(p).kind == TransitionKind::kFiniteTime;
    finite += is_finite;
    mismatches += below != is_finite;
  }
  c.note("bound_laws", checked);
  c.note("finite", finite);
  c.note("mismatches", mismatches);
  c.expect(mismatches == 0, "FiniteTime iff c_crit < sup");

  for (const auto& atoms : {std::array<DegreeKey, 3>{{{1, 0}, {0, 1}, {3, 0}}},
                            std::array<DegreeKey, 3>{{{2, 0}, {0, 2}, {3, 0}}}}) {
    int never_vertices = 0;
    for (const auto& pt : barycentric_grid(atoms, 50)) {
      if ((pt.j1 == 50 || pt.j2 == 50 || pt.j3 == 50) &&
          pt.transition.kind == TransitionKind::kNever) {
        ++never_vertices;
      }
    }
    c.expect(never_vertices == 3, "simplex vertices classified never");
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Checks&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "three-vertex motif law exactness", 10, motif_law},
      {2, "directed Erdos-Renyi threshold", 30, double_poisson_threshold},
      {3, "Bethe-lattice gel point", 60, bethe_gel_point},
      {4, "Flory-Stockmayer reproduction", 5, flory_stockmayer},
      {5, "closed-form mu(t) vs ODE", 5, mu_closed_form},
      {6, "analytic degree law vs KMC", 60, degree_law_vs_kmc},
      {7, "generating-function size law vs MC", 60, size_law_vs_mc},
      {8, "classifier/threshold coherence", 10, classifier_coherence},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(elapsed < cr.budget_seconds, "runtime budget");
    failed += !checks.ok();
    std::printf("%s %d %s (%.2f s / %.0f s):%s\n", checks.ok() ? "PASS" : "FAIL", cr.id, cr.name,
                elapsed, cr.budget_seconds, checks.summary().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
