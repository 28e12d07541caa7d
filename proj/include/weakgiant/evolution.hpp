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

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "weakgiant/degdist.hpp"

namespace weakgiant {

// |nu01 - nu10| below this fraction of max(nu01, nu10) counts as symmetric.
inline constexpr double kSymmetryTol = 1e-12;
// Margin used when comparing a conversion against its supremum.
inline constexpr double kConversionTol = 1e-10;

/// Distribution P(n_max, k_max) of per-vertex degree bounds: the only input
/// of the bounded-degree evolution process. At least one class must carry
/// in-spots and at least one must carry out-spots.
class BoundDist {
 public:
  static BoundDist from_entries(std::span<const DegreeEntry> entries,
                                double tol = kNormalizationTol);

  const BivariateDegreeDist& table() const noexcept { return table_; }
  const std::map<DegreeKey, double>& entries() const noexcept { return table_.entries(); }

 private:
  explicit BoundDist(BivariateDegreeDist table) : table_(std::move(table)) {}

  BivariateDegreeDist table_;
};

// Time-independent moments of the bounds; nu10 and nu01 are the mean
// numbers of in- and out-spots per vertex.
struct NuMoments {
  double nu10 = 0.0;
  double nu01 = 0.0;
  double nu20 = 0.0;
  double nu02 = 0.0;
  double nu11 = 0.0;

  bool symmetric() const noexcept;
};

NuMoments nu_moments(const BoundDist& bounds);

/// Mean number of edges per vertex at time t (rate constant 1), the solution
/// of mu' = (nu01 - mu)(nu10 - mu), mu(0) = 0:
///   mu(t) = nu01 nu10 (e^{t d} - 1) / (d + nu10 (e^{t d} - 1)),  d = nu10 - nu01,
/// and nu^2 t / (1 + nu t) in the symmetric case.
double mu_of_t(const NuMoments& nu, double t);
double mu_of_t(const BoundDist& bounds, double t);

// Fractions of in-spots (c_n) and out-spots (c_k) converted into edges.
struct Conversions {
  double c_n = 0.0;
  double c_k = 0.0;
};

Conversions conversions(const NuMoments& nu, double t);
Conversions conversions(const BoundDist& bounds, double t);
// The side with fewer spots saturates at 1; the other at the spot ratio.
Conversions conversion_sup(const NuMoments& nu);
Conversions conversion_sup(const BoundDist& bounds);

// Inverse of conversions(); throws kConversionOutOfRange unless
// 0 <= c_n < sup c_n.
double time_of_conversion(const NuMoments& nu, double c_n);
double time_of_conversion(const BoundDist& bounds, double c_n);

// Joint law u(n, k, n_max, k_max): within each bound class, n and k are
// independent binomials with success probabilities c_n and c_k.
struct FullDegreeState {
  // key (n, k, n_max, k_max)
  std::map<std::array<int, 4>, double> entries;
  double t = 0.0;
  double c_n = 0.0;
  double c_k = 0.0;

  double total() const;
};

FullDegreeState degree_state_at(const BoundDist& bounds, double t);
// Same law parameterized by the in-spot conversion; c_n may equal its
// supremum (the t -> infinity state).
FullDegreeState degree_state_at_conversion(const BoundDist& bounds, double c_n);
BivariateDegreeDist marginal_degree_dist(const FullDegreeState& state);
// Marginal degree law in the t -> infinity limit.
BivariateDegreeDist asymptotic_dist(const BoundDist& bounds);

struct SecondMoments {
  double mu20 = 0.0;
  double mu02 = 0.0;
  double mu11 = 0.0;
};

// Closed-form second moments of the marginal at conversion c_n, with
// c_k = (nu10 / nu01) c_n.
SecondMoments mu_moments_at(const BoundDist& bounds, double c_n);

// Coefficients of a c^2 + b c + c0, whose sign is the weak-component
// criterion evaluated along the process as a function of c_n.
struct Quadratic {
  double a = 0.0;
  double b = 0.0;
  double c0 = 0.0;

  double operator()(double x) const noexcept { return (a * x + b) * x + c0; }
};

Quadratic criterion_quadratic(const NuMoments& nu);

struct CriticalConversion {
  double c_n = 0.0;
  double c_k = 0.0;
};

// c_n = nu01 / (nu11 + sqrt((nu02 - nu01)(nu20 - nu10))), the positive root
// of criterion_quadratic. Empty when that root is not a positive real.
// The value may exceed the supremum of c_n; see transition_class.
std::optional<CriticalConversion> critical_conversion(const NuMoments& nu);
std::optional<CriticalConversion> critical_conversion(const BoundDist& bounds);

enum class TransitionKind { kFiniteTime, kAsymptotic, kNever };

std::string_view to_string(TransitionKind kind);

struct TransitionClass {
  TransitionKind kind = TransitionKind::kNever;
  // Set only for kFiniteTime.
  std::optional<double> c_n_crit;
  std::optional<double> c_k_crit;
  std::optional<double> t_crit;
};

/// Whether the weak giant component appears in finite time.
///
/// The criterion is evaluated at the supremum of the conversions:
///   A1 = (nu02 - nu01)(nu20 - nu10) - (nu11 - nu01)^2   when nu01 >= nu10,
///   A2 = (nu02 - nu01)(nu20 - nu10) - (nu11 - nu10)^2   when nu01 <= nu10.
/// A positive value is a finite-time transition and a negative one never
/// transitions. When the applicable value vanishes (within a relative 1e-12)
/// the root of the quadratic decides: below the supremum it is still a
/// finite-time transition (bounds with n_max = k_max everywhere make A vanish
/// identically), otherwise the transition is only asymptotic.
TransitionClass transition_class(const NuMoments& nu);
TransitionClass transition_class(const BoundDist& bounds);

struct GridPoint {
  int j1 = 0;
  int j2 = 0;
  int j3 = 0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  TransitionClass transition;
};

// Lattice points f_i = j_i / resolution on the simplex spanned by three bound
// atoms, row-major in (j1, j2). Points whose mixture has no in-spots or no
// out-spots are kNever. Throws kInvalidArgument when resolution < 2.
std::vector<GridPoint> barycentric_grid(const std::array<DegreeKey, 3>& atoms, int resolution);

// Header "# f1\tf2\tf3\tclass\tc_n_crit\tt_crit"; non-finite points leave the
// numeric fields empty.
void write_barycentric_tsv(std::ostream& out, std::span<const GridPoint> grid);

}  // namespace weakgiant
