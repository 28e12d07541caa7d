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

#include "weakgiant/criteria.hpp"

#include "weakgiant/error.hpp"

namespace weakgiant {

double criticality_determinant(const MomentSet& m) {
  const double mu = m.mean();
  const double diag = mu - m.mu11;
  return diag * diag - (m.mu20 - mu) * (m.mu02 - mu);
}

double criticality_determinant(const BivariateDegreeDist& d, double tol) {
  require_edge_balance(d, tol);
  return criticality_determinant(moment_set(d));
}

bool has_giant_in_out(const BivariateDegreeDist& d, double tol) {
  require_edge_balance(d, tol);
  const MomentSet m = moment_set(d);
  return m.mu11 - m.mean() > 0.0;
}

bool has_giant_weak(const BivariateDegreeDist& d, double tol) {
  require_edge_balance(d, tol);
  const MomentSet m = moment_set(d);
  return criticality_determinant(m) < 0.0 || m.mu11 - m.mean() > 0.0;
}

bool has_giant_undirected_projection(const BivariateDegreeDist& d, double tol) {
  require_edge_balance(d, tol);
  const MomentSet m = moment_set(d);
  return 2.0 * m.mu11 + m.mu02 + m.mu20 - 4.0 * m.mean() > 0.0;
}

bool molloy_reed(const UnivariateDegreeDist& d) { return d.moment(2) - 2.0 * d.moment(1) > 0.0; }

double mean_weak_component_size(const BivariateDegreeDist& d, double tol) {
  require_edge_balance(d, tol);
  const MomentSet m = moment_set(d);
  const double mu = m.mean();
  if (!(mu > 0.0)) return 1.0;
  const double det = criticality_determinant(m);
  if (!(det > 0.0)) {
    throw Error(ErrorKind::kSupercritical,
                "mean weak-component size diverges: determinant D = " + std::to_string(det));
  }
  return 1.0 + mu * mu * (m.mu02 + m.mu20 - 2.0 * m.mu11) / det;
}

ConnectivityReport criteria_report(const BivariateDegreeDist& d, const SolverOptions& options) {
  require_edge_balance(d, options.balance_tol);
  ConnectivityReport r;
  r.moments = moment_set(d);
  r.determinant_D = criticality_determinant(r.moments);
  r.paper_A = -r.determinant_D;
  const double tol = options.balance_tol;
  r.giant_in_out = has_giant_in_out(d, tol);
  r.giant_weak = has_giant_weak(d, tol);
  r.giant_undirected_projection = has_giant_undirected_projection(d, tol);
  if (r.determinant_D > 0.0 || !(r.moments.mean() > 0.0)) {
    r.mean_weak_size = mean_weak_component_size(d, tol);
  }
  if (r.giant_weak) r.giant_weak_fraction = giant_weak_fraction(d, options);
  return r;
}

}  // namespace weakgiant
