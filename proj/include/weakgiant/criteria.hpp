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

#include "weakgiant/degdist.hpp"
#include "weakgiant/gfsolver.hpp"

namespace weakgiant {

// Outcome of every giant-component test for one degree law.
struct ConnectivityReport {
  MomentSet moments;
  double determinant_D = 0.0;
  // Always exactly -determinant_D.
  double paper_A = 0.0;
  bool giant_weak = false;
  bool giant_in_out = false;
  bool giant_undirected_projection = false;
  std::optional<double> mean_weak_size;
  std::optional<double> giant_weak_fraction;
};

/// D = (mu - mu11)^2 - (mu20 - mu)(mu02 - mu), with mu = mu10 = mu01.
///
/// D is the determinant of the linear system satisfied by W'_in(1) and
/// W'_out(1). D > 0 is subcritical, D < 0 has a giant weak component.
/// Reports also carry A = -D.
double criticality_determinant(const MomentSet& m);
double criticality_determinant(const BivariateDegreeDist& d, double tol = kBalanceTol);

// D < 0, or a giant in-/out-component (mu11 - mu > 0). The second clause
// covers laws such as n = k = 2 where D vanishes identically.
bool has_giant_weak(const BivariateDegreeDist& d, double tol = kBalanceTol);
// mu11 - mu > 0
bool has_giant_in_out(const BivariateDegreeDist& d, double tol = kBalanceTol);
// 2 mu11 + mu02 + mu20 - 4 mu > 0, the undirected test on d(l) = sum_{n+k=l} u
bool has_giant_undirected_projection(const BivariateDegreeDist& d, double tol = kBalanceTol);
// mu2 - 2 mu1 > 0 on an undirected law.
bool molloy_reed(const UnivariateDegreeDist& d);

// W'(1) = 1 + mu^2 (mu02 + mu20 - 2 mu11) / D. Throws kSupercritical unless
// D > 0; a law without edges returns 1.
double mean_weak_component_size(const BivariateDegreeDist& d, double tol = kBalanceTol);

ConnectivityReport criteria_report(const BivariateDegreeDist& d,
                                   const SolverOptions& options = {});

}  // namespace weakgiant
