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
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace weakgiant {

inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kBalanceTol = 1e-9;

// (in-degree n, out-degree k)
using DegreeKey = std::pair<int, int>;

struct DegreeEntry {
  int n = 0;
  int k = 0;
  double prob = 0.0;
};

/// Finite-support probability table u(n, k) over in-degree n and
/// out-degree k.
///
/// Entries are stored exactly as supplied: zero-probability cells are absent
/// and nothing is ever renormalized. Construction fails if the table does not
/// sum to one within the given tolerance.
class BivariateDegreeDist {
 public:
  static BivariateDegreeDist from_entries(std::span<const DegreeEntry> entries,
                                          double tol = kNormalizationTol);

  const std::map<DegreeKey, double>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double probability(int n, int k) const;
  int max_in() const noexcept { return max_in_; }
  int max_out() const noexcept { return max_out_; }
  std::vector<DegreeEntry> to_entries() const;

  friend bool operator==(const BivariateDegreeDist&, const BivariateDegreeDist&) = default;

 private:
  explicit BivariateDegreeDist(std::map<DegreeKey, double> entries);

  std::map<DegreeKey, double> entries_;
  int max_in_ = 0;
  int max_out_ = 0;
};

/// Partial moments mu_ij = sum n^i k^j u(n,k) used by every criterion.
struct MomentSet {
  double mu00 = 0.0;
  double mu10 = 0.0;
  double mu01 = 0.0;
  double mu11 = 0.0;
  double mu20 = 0.0;
  double mu02 = 0.0;

  // Common first moment of an edge-balanced table.
  double mean() const noexcept { return 0.5 * (mu10 + mu01); }
};

// sum n^i k^j u(n,k) with 0^0 = 1.
double moment(const BivariateDegreeDist& d, int i, int j);
MomentSet moment_set(const BivariateDegreeDist& d);
bool check_edge_balance(const BivariateDegreeDist& d, double tol = kBalanceTol);
// Throws ErrorKind::kEdgeImbalance when check_edge_balance fails.
void require_edge_balance(const BivariateDegreeDist& d, double tol = kBalanceTol);

/// Probability law over a single nonnegative integer (total degree, or
/// component size for histograms).
class UnivariateDegreeDist {
 public:
  static UnivariateDegreeDist from_entries(std::span<const std::pair<int, double>> entries,
                                           double tol = kNormalizationTol);

  const std::map<int, double>& entries() const noexcept { return entries_; }
  double probability(int l) const;
  double moment(int order) const;
  double total() const;

 private:
  explicit UnivariateDegreeDist(std::map<int, double> entries) : entries_(std::move(entries)) {}

  std::map<int, double> entries_;
};

// d(l) = sum_{n+k=l} u(n,k)
UnivariateDegreeDist undirected_projection(const BivariateDegreeDist& d);

// n u(n,k) / mu10: law of the vertex at the head of a uniformly chosen edge.
BivariateDegreeDist size_biased_in(const BivariateDegreeDist& d);
// k u(n,k) / mu01: law of the vertex at the tail of a uniformly chosen edge.
BivariateDegreeDist size_biased_out(const BivariateDegreeDist& d);

}  // namespace weakgiant
