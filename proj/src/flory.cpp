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

#include "weakgiant/flory.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "weakgiant/error.hpp"

namespace weakgiant {

void validate(const FloryMixture& mix) {
  if (mix.f1 < 0.0 || mix.f2 < 0.0 || mix.f3 < 0.0) {
    throw Error(ErrorKind::kInvalidMixture, "mole fractions must be nonnegative");
  }
  const double total = mix.f1 + mix.f2 + mix.f3;
  if (!(std::abs(total - 1.0) <= 1e-12)) {
    throw Error(ErrorKind::kInvalidMixture,
                "mole fractions sum to " + std::to_string(total) + ", expected 1");
  }
  if (mix.n < 2) throw Error(ErrorKind::kInvalidMixture, "functionality n must be >= 2");
}

BoundDist to_bound_dist(const FloryMixture& mix) {
  validate(mix);
  if (!(mix.f2 > 0.0)) throw Error(ErrorKind::kNoReactivePair, "mixture has no B groups");
  if (!(mix.f1 > 0.0) && !(mix.f3 > 0.0)) {
    throw Error(ErrorKind::kNoReactivePair, "mixture has no A groups");
  }
  std::map<DegreeKey, double> atoms;
  if (mix.f1 > 0.0) atoms[{2, 0}] += mix.f1;
  atoms[{0, 2}] += mix.f2;
  if (mix.f3 > 0.0) atoms[{mix.n, 0}] += mix.f3;
  std::vector<DegreeEntry> entries;
  for (const auto& [key, prob] : atoms) entries.push_back({key.first, key.second, prob});
  return BoundDist::from_entries(entries);
}

FloryParameters flory_parameters(const FloryMixture& mix) {
  validate(mix);
  const double a_groups = 2.0 * mix.f1 + mix.n * mix.f3;
  if (!(a_groups > 0.0) || !(mix.f2 > 0.0)) {
    throw Error(ErrorKind::kDegenerateMixture, "mixture needs both A and B groups");
  }
  FloryParameters p;
  p.alpha_c = 1.0 / (mix.n - 1);
  p.rho = mix.n * mix.f3 / a_groups;
  p.r = a_groups / (2.0 * mix.f2);
  return p;
}

double gel_threshold(const FloryMixture& mix) {
  validate(mix);
  const double branching = mix.f1 + 0.5 * (static_cast<double>(mix.n) * mix.n - mix.n) * mix.f3;
  if (!(branching > 0.0) || !(mix.f2 > 0.0)) {
    throw Error(ErrorKind::kDegenerateMixture, "mixture needs both A and B groups");
  }
  return std::sqrt(mix.f2 / branching);
}

std::optional<double> gel_conversion(const FloryMixture& mix) {
  const double threshold = gel_threshold(mix);
  const double sup = conversion_sup(nu_moments(to_bound_dist(mix))).c_n;
  if (threshold < sup - kConversionTol) return threshold;
  return std::nullopt;
}

GelPoint gel_point_pA(const FloryParameters& params) {
  const double mix = params.alpha_c + params.rho - params.alpha_c * params.rho;
  GelPoint g;
  g.p_A = std::sqrt(params.alpha_c / (params.r * mix));
  g.p_B = params.r * g.p_A;
  return g;
}

double alpha_of(double p_A, const FloryParameters& params) {
  return p_A * p_A * params.r * (params.alpha_c + params.rho - params.alpha_c * params.rho);
}

double alpha_of_pB(double p_B, const FloryParameters& params) {
  return p_B * p_B * (params.alpha_c + params.rho - params.alpha_c * params.rho) / params.r;
}

bool is_gelled(double p_A, const FloryParameters& params) {
  return alpha_of(p_A, params) > params.alpha_c * (1.0 + 1e-12);
}

}  // namespace weakgiant
