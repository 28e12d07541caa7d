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

#include "weakgiant/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "weakgiant/error.hpp"

namespace weakgiant {
namespace {

std::vector<double> binomial_pmf(int trials, double p) {
  std::vector<double> pmf(static_cast<std::size_t>(trials) + 1);
  double choose = 1.0;
  for (int j = 0; j <= trials; ++j) {
    pmf[j] = choose * std::pow(p, j) * std::pow(1.0 - p, trials - j);
    choose = choose * (trials - j) / (j + 1);
  }
  return pmf;
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::kNegativeTime, "time must be finite and nonnegative, got " +
                                              std::to_string(t));
  }
}

[[noreturn]] void out_of_range(double c_n, double sup) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "conversion c_n = %.17g outside [0, %.17g)", c_n, sup);
  throw Error(ErrorKind::kConversionOutOfRange, buf);
}

}  // namespace

BoundDist BoundDist::from_entries(std::span<const DegreeEntry> entries, double tol) {
  BivariateDegreeDist table = BivariateDegreeDist::from_entries(entries, tol);
  if (table.max_in() == 0) {
    throw Error(ErrorKind::kInvalidBounds, "no bound class has in-spots (n_max > 0)");
  }
  if (table.max_out() == 0) {
    throw Error(ErrorKind::kInvalidBounds, "no bound class has out-spots (k_max > 0)");
  }
  return BoundDist(std::move(table));
}

bool NuMoments::symmetric() const noexcept {
  return std::abs(nu01 - nu10) < kSymmetryTol * std::max(nu01, nu10);
}

NuMoments nu_moments(const BoundDist& bounds) {
  const MomentSet m = moment_set(bounds.table());
  return {m.mu10, m.mu01, m.mu20, m.mu02, m.mu11};
}

double mu_of_t(const NuMoments& nu, double t) {
  require_time(t);
  if (t == 0.0) return 0.0;
  if (nu.symmetric()) {
    const double v = 0.5 * (nu.nu01 + nu.nu10);
    return v / (1.0 + 1.0 / (v * t));
  }
  // Same closed form rearranged so that every operation is monotone in t.
  const double delta = nu.nu10 - nu.nu01;
  const double grown = std::expm1(t * delta);
  if (!std::isfinite(grown)) return std::min(nu.nu01, nu.nu10);
  return nu.nu01 / (1.0 + delta / (nu.nu10 * grown));
}

double mu_of_t(const BoundDist& bounds, double t) { return mu_of_t(nu_moments(bounds), t); }

Conversions conversions(const NuMoments& nu, double t) {
  const double c_n = mu_of_t(nu, t) / nu.nu10;
  return {c_n, nu.nu10 / nu.nu01 * c_n};
}

Conversions conversions(const BoundDist& bounds, double t) {
  return conversions(nu_moments(bounds), t);
}

Conversions conversion_sup(const NuMoments& nu) {
  if (nu.symmetric()) return {1.0, 1.0};
  if (nu.nu01 >= nu.nu10) return {1.0, nu.nu10 / nu.nu01};
  return {nu.nu01 / nu.nu10, 1.0};
}

Conversions conversion_sup(const BoundDist& bounds) { return conversion_sup(nu_moments(bounds)); }

double time_of_conversion(const NuMoments& nu, double c_n) {
  const double sup = conversion_sup(nu).c_n;
  if (!(c_n >= 0.0) || !(c_n < sup)) out_of_range(c_n, sup);
  if (nu.symmetric()) {
    const double v = 0.5 * (nu.nu01 + nu.nu10);
    return c_n / (v * (1.0 - c_n));
  }
  // t = log((1 - c) nu01 / (nu01 - c nu10)) / (nu10 - nu01), evaluated as
  // (c / (nu01 - c nu10)) * log1p(y) / y so it stays accurate near symmetry.
  const double delta = nu.nu10 - nu.nu01;
  const double vacant = nu.nu01 - c_n * nu.nu10;
  const double y = c_n * delta / vacant;
  const double ratio = y == 0.0 ? 1.0 : std::log1p(y) / y;
  return c_n / vacant * ratio;
}

double time_of_conversion(const BoundDist& bounds, double c_n) {
  return time_of_conversion(nu_moments(bounds), c_n);
}

double FullDegreeState::total() const {
  double sum = 0.0;
  for (const auto& [key, prob] : entries) sum += prob;
  return sum;
}

FullDegreeState degree_state_at_conversion(const BoundDist& bounds, double c_n) {
  const NuMoments nu = nu_moments(bounds);
  const Conversions sup = conversion_sup(nu);
  if (!(c_n >= 0.0) || c_n > sup.c_n * (1.0 + kConversionTol)) out_of_range(c_n, sup.c_n);
  FullDegreeState state;
  state.c_n = std::min(c_n, sup.c_n);
  state.c_k = std::min(nu.nu10 / nu.nu01 * state.c_n, sup.c_k);
  if (state.c_n == sup.c_n) state.c_k = sup.c_k;
  for (const auto& [bound, prob] : bounds.entries()) {
    const auto [n_max, k_max] = bound;
    const auto in_law = binomial_pmf(n_max, state.c_n);
    const auto out_law = binomial_pmf(k_max, state.c_k);
    for (int n = 0; n <= n_max; ++n) {
      if (in_law[n] == 0.0) continue;
      for (int k = 0; k <= k_max; ++k) {
        const double p = in_law[n] * out_law[k] * prob;
        if (p > 0.0) state.entries[{n, k, n_max, k_max}] = p;
      }
    }
  }
  return state;
}

FullDegreeState degree_state_at(const BoundDist& bounds, double t) {
  require_time(t);
  const Conversions c = conversions(bounds, t);
  const Conversions sup = conversion_sup(bounds);
  FullDegreeState state = degree_state_at_conversion(bounds, std::min(c.c_n, sup.c_n));
  state.t = t;
  return state;
}

BivariateDegreeDist marginal_degree_dist(const FullDegreeState& state) {
  std::map<DegreeKey, double> table;
  for (const auto& [key, prob] : state.entries) table[{key[0], key[1]}] += prob;
  std::vector<DegreeEntry> entries;
  entries.reserve(table.size());
  for (const auto& [key, prob] : table) entries.push_back({key.first, key.second, prob});
  return BivariateDegreeDist::from_entries(entries);
}

BivariateDegreeDist asymptotic_dist(const BoundDist& bounds) {
  return marginal_degree_dist(degree_state_at_conversion(bounds, conversion_sup(bounds).c_n));
}

SecondMoments mu_moments_at(const BoundDist& bounds, double c_n) {
  const NuMoments nu = nu_moments(bounds);
  const double sup = conversion_sup(nu).c_n;
  if (!(c_n >= 0.0) || c_n > sup * (1.0 + kConversionTol)) out_of_range(c_n, sup);
  const double c_k = nu.nu10 / nu.nu01 * c_n;
  SecondMoments m;
  m.mu02 = c_k * nu.nu01 - c_k * c_k * nu.nu01 + c_k * c_k * nu.nu02;
  m.mu20 = c_n * nu.nu10 - c_n * c_n * nu.nu10 + c_n * c_n * nu.nu20;
  m.mu11 = c_n * c_k * nu.nu11;
  return m;
}

Quadratic criterion_quadratic(const NuMoments& nu) {
  Quadratic q;
  q.a = nu.nu01 * nu.nu10 - nu.nu02 * nu.nu10 - nu.nu11 * nu.nu11 - nu.nu01 * nu.nu20 +
        nu.nu02 * nu.nu20;
  q.b = 2.0 * nu.nu01 * nu.nu11;
  q.c0 = -nu.nu01 * nu.nu01;
  return q;
}

namespace {

// (nu02 - nu01)(nu20 - nu10); both factors are nonnegative for integer bounds.
double spot_pair_product(const NuMoments& nu) {
  return std::max(0.0, nu.nu02 - nu.nu01) * std::max(0.0, nu.nu20 - nu.nu10);
}

}  // namespace

std::optional<CriticalConversion> critical_conversion(const NuMoments& nu) {
  const double denom = nu.nu11 + std::sqrt(spot_pair_product(nu));
  if (!(denom > 0.0) || !(nu.nu01 > 0.0)) return std::nullopt;
  return CriticalConversion{nu.nu01 / denom, nu.nu10 / denom};
}

std::optional<CriticalConversion> critical_conversion(const BoundDist& bounds) {
  return critical_conversion(nu_moments(bounds));
}

std::string_view to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::kFiniteTime: return "finite";
    case TransitionKind::kAsymptotic: return "asymptotic";
    case TransitionKind::kNever: return "never";
  }
  return "never";
}

TransitionClass transition_class(const NuMoments& nu) {
  const double q = spot_pair_product(nu);
  const double gap_out = nu.nu11 - nu.nu01;
  const double gap_in = nu.nu11 - nu.nu10;
  const bool symmetric = nu.symmetric();
  double criterion = -std::numeric_limits<double>::infinity();
  double scale = std::max(1.0, q);
  if (symmetric || nu.nu01 >= nu.nu10) {
    criterion = std::max(criterion, q - gap_out * gap_out);
    scale = std::max(scale, gap_out * gap_out);
  }
  if (symmetric || nu.nu01 <= nu.nu10) {
    criterion = std::max(criterion, q - gap_in * gap_in);
    scale = std::max(scale, gap_in * gap_in);
  }

  const auto crit = critical_conversion(nu);
  const Conversions sup = conversion_sup(nu);
  const bool root_below_sup = crit && crit->c_n < sup.c_n - kConversionTol;

  TransitionClass result;
  const double tol = 1e-12 * scale;
  if (criterion < -tol) {
    result.kind = TransitionKind::kNever;
  } else if (criterion > tol || root_below_sup) {
    result.kind = root_below_sup ? TransitionKind::kFiniteTime : TransitionKind::kAsymptotic;
  } else {
    result.kind = TransitionKind::kAsymptotic;
  }
  if (result.kind == TransitionKind::kFiniteTime) {
    result.c_n_crit = crit->c_n;
    result.c_k_crit = nu.nu10 / nu.nu01 * crit->c_n;
    result.t_crit = time_of_conversion(nu, crit->c_n);
  }
  return result;
}

TransitionClass transition_class(const BoundDist& bounds) {
  return transition_class(nu_moments(bounds));
}

std::vector<GridPoint> barycentric_grid(const std::array<DegreeKey, 3>& atoms, int resolution) {
  if (resolution < 2) {
    throw Error(ErrorKind::kInvalidArgument, "barycentric resolution must be >= 2");
  }
  for (const auto& [n, k] : atoms) {
    if (n < 0 || k < 0) throw Error(ErrorKind::kNegativeIndex, "negative bound in atom");
  }
  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(resolution + 1) * (resolution + 2) / 2);
  for (int j1 = 0; j1 <= resolution; ++j1) {
    for (int j2 = 0; j1 + j2 <= resolution; ++j2) {
      GridPoint pt;
      pt.j1 = j1;
      pt.j2 = j2;
      pt.j3 = resolution - j1 - j2;
      pt.f1 = static_cast<double>(pt.j1) / resolution;
      pt.f2 = static_cast<double>(pt.j2) / resolution;
      pt.f3 = static_cast<double>(pt.j3) / resolution;

      // Merge repeated atoms and drop empty species.
      std::map<DegreeKey, double> mix;
      const std::array<double, 3> weights{pt.f1, pt.f2, pt.f3};
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (weights[i] > 0.0) mix[atoms[i]] += weights[i];
      }
      std::vector<DegreeEntry> entries;
      int max_in = 0;
      int max_out = 0;
      for (const auto& [key, prob] : mix) {
        entries.push_back({key.first, key.second, prob});
        max_in = std::max(max_in, key.first);
        max_out = std::max(max_out, key.second);
      }
      if (max_in > 0 && max_out > 0) {
        pt.transition = transition_class(BoundDist::from_entries(entries));
      }
      grid.push_back(pt);
    }
  }
  return grid;
}

void write_barycentric_tsv(std::ostream& out, std::span<const GridPoint> grid) {
  out << "# f1\tf2\tf3\tclass\tc_n_crit\tt_crit\n";
  char buf[128];
  for (const GridPoint& pt : grid) {
    std::snprintf(buf, sizeof buf, "%.17g\t%.17g\t%.17g\t", pt.f1, pt.f2, pt.f3);
    out << buf << to_string(pt.transition.kind) << '\t';
    if (pt.transition.kind == TransitionKind::kFiniteTime) {
      std::snprintf(buf, sizeof buf, "%.17g\t%.17g", *pt.transition.c_n_crit,
                    *pt.transition.t_crit);
      out << buf;
    } else {
      out << '\t';
    }
    out << '\n';
  }
}

}  // namespace weakgiant
