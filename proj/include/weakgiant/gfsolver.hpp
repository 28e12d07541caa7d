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

#include <utility>
#include <vector>

#include "weakgiant/degdist.hpp"
#include "weakgiant/series.hpp"

namespace weakgiant {

struct SolverOptions {
  double tol = 1e-12;
  long max_iter = 1'000'000;
  double balance_tol = kBalanceTol;
  // When set, every iterate (s_out, s_in) is appended, starting with (0, 0).
  std::vector<std::pair<double, double>>* trace = nullptr;
};

/// Smallest nonnegative solution of
///   s_in  = U_in(s_out, s_in),   s_out = U_out(s_out, s_in),
/// i.e. the probabilities that following an edge forwards (s_in) or backwards
/// (s_out) leads into a finite weak component.
struct FixedPointSolution {
  double s_out = 1.0;
  double s_in = 1.0;
  long iterations = 0;
  double residual = 0.0;
};

// Generating functions of the degree law and its size-biased versions:
//   U(z,w)     = sum u(n,k) z^n w^k
//   U_in(z,w)  = sum n u(n,k) z^(n-1) w^k / mu10
//   U_out(z,w) = sum k u(n,k) z^n w^(k-1) / mu01
double generating_function(const BivariateDegreeDist& d, double z, double w);
double generating_function_in(const BivariateDegreeDist& d, double z, double w);
double generating_function_out(const BivariateDegreeDist& d, double z, double w);

// Picard iteration from (0,0). Throws kNoConvergence (message carries the
// iteration count and residual) if tol is not reached within max_iter.
FixedPointSolution interior_fixed_point(const BivariateDegreeDist& d,
                                        const SolverOptions& options = {});

// 1 - U(s_out, s_in) at the smallest fixed point.
double giant_weak_fraction(const BivariateDegreeDist& d, const SolverOptions& options = {});

// Coefficients w(0..order) of W(z) = z U(W_out(z), W_in(z)), where W_in and
// W_out solve the truncated fixed-point system. w(0) = 0; w(s) is the
// probability that a uniformly chosen vertex lies in a weak component of
// size s. Small negative roundoff is clamped to zero.
TruncatedSeries weak_size_distribution(const BivariateDegreeDist& d, int order,
                                       const SolverOptions& options = {});

}  // namespace weakgiant
