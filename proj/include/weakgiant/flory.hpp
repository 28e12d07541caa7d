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

#include <optional>

#include "weakgiant/evolution.hpp"

namespace weakgiant {

// Step polymerization of A-A, B-B and a branched A_n unit. Bonds only form
// between an A and a B group; A groups are in-spots, B groups out-spots.
struct FloryMixture {
  double f1 = 0.0;  // linear A-A units
  double f2 = 0.0;  // linear B-B units
  double f3 = 0.0;  // branched units with n A groups
  int n = 3;
};

// Flory's own parameterization of the same mixture.
struct FloryParameters {
  double alpha_c = 0.0;  // branching coefficient at the gel point, 1/(n-1)
  double rho = 0.0;      // fraction of A groups on branched units
  double r = 0.0;        // A groups per B group
};

struct GelPoint {
  double p_A = 0.0;
  double p_B = 0.0;
};

// Throws kInvalidMixture unless f_i >= 0, sum f_i = 1 within 1e-12, n >= 2.
void validate(const FloryMixture& mix);

// Atoms P(2,0) = f1, P(0,2) = f2, P(n,0) = f3 (empty species dropped,
// coinciding atoms merged). Throws kNoReactivePair when the mixture has no A
// groups or no B groups.
BoundDist to_bound_dist(const FloryMixture& mix);

FloryParameters flory_parameters(const FloryMixture& mix);

// sqrt(f2 / (f1 + (n^2 - n) f3 / 2)), whether or not it is reachable.
double gel_threshold(const FloryMixture& mix);
// gel_threshold when it lies below the supremum of c_n; empty otherwise
// (no gel in finite time).
std::optional<double> gel_conversion(const FloryMixture& mix);

// p_A,crit = sqrt(alpha_c / (r (alpha_c + rho - alpha_c rho))), p_B = r p_A.
GelPoint gel_point_pA(const FloryParameters& params);

// alpha = p_A^2 r (alpha_c + rho - alpha_c rho)
double alpha_of(double p_A, const FloryParameters& params);
// alpha = p_B^2 (alpha_c + rho - alpha_c rho) / r
double alpha_of_pB(double p_B, const FloryParameters& params);
// alpha > alpha_c; values within a relative 1e-12 of alpha_c are the boundary.
bool is_gelled(double p_A, const FloryParameters& params);

}  // namespace weakgiant
