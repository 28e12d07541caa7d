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

#include "weakgiant/degdist.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "weakgiant/error.hpp"

namespace weakgiant {
namespace {

double int_pow(double base, int exponent) {
  double result = 1.0;
  for (int e = 0; e < exponent; ++e) result *= base;
  return result;
}

std::string key_string(int n, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

BivariateDegreeDist::BivariateDegreeDist(std::map<DegreeKey, double> entries)
    : entries_(std::move(entries)) {
  for (const auto& [key, prob] : entries_) {
    max_in_ = std::max(max_in_, key.first);
    max_out_ = std::max(max_out_, key.second);
  }
}

BivariateDegreeDist BivariateDegreeDist::from_entries(std::span<const DegreeEntry> entries,
                                                      double tol) {
  std::map<DegreeKey, double> table;
  double total = 0.0;
  for (const DegreeEntry& e : entries) {
    if (e.n < 0 || e.k < 0) {
      throw Error(ErrorKind::kNegativeIndex, "negative degree in entry " + key_string(e.n, e.k));
    }
    if (!(e.prob > 0.0) || !std::isfinite(e.prob)) {
      throw Error(ErrorKind::kNonPositiveProbability,
                  "probability of entry " + key_string(e.n, e.k) + " must be positive");
    }
    if (!table.emplace(DegreeKey{e.n, e.k}, e.prob).second) {
      throw Error(ErrorKind::kDuplicateKey, "duplicate entry " + key_string(e.n, e.k));
    }
    total += e.prob;
  }
  if (table.empty() || std::abs(total - 1.0) > tol) {
    throw Error(ErrorKind::kNotNormalized,
                "probabilities sum to " + std::to_string(total) + ", expected 1");
  }
  return BivariateDegreeDist(std::move(table));
}

double BivariateDegreeDist::probability(int n, int k) const {
  auto it = entries_.find({n, k});
  return it == entries_.end() ? 0.0 : it->second;
}

std::vector<DegreeEntry> BivariateDegreeDist::to_entries() const {
  std::vector<DegreeEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, prob] : entries_) out.push_back({key.first, key.second, prob});
  return out;
}

double moment(const BivariateDegreeDist& d, int i, int j) {
  if (i < 0 || j < 0) throw Error(ErrorKind::kNegativeIndex, "moment orders must be nonnegative");
  double sum = 0.0;
  for (const auto& [key, prob] : d.entries()) {
    sum += int_pow(key.first, i) * int_pow(key.second, j) * prob;
  }
  return sum;
}

MomentSet moment_set(const BivariateDegreeDist& d) {
  MomentSet m;
  for (const auto& [key, prob] : d.entries()) {
    const double n = key.first;
    const double k = key.second;
    m.mu00 += prob;
    m.mu10 += n * prob;
    m.mu01 += k * prob;
    m.mu11 += n * k * prob;
    m.mu20 += n * n * prob;
    m.mu02 += k * k * prob;
  }
  return m;
}

bool check_edge_balance(const BivariateDegreeDist& d, double tol) {
  return std::abs(moment(d, 1, 0) - moment(d, 0, 1)) <= tol;
}

void require_edge_balance(const BivariateDegreeDist& d, double tol) {
  const double in = moment(d, 1, 0);
  const double out = moment(d, 0, 1);
  if (std::abs(in - out) > tol) {
    throw Error(ErrorKind::kEdgeImbalance, "mean in-degree " + std::to_string(in) +
                                               " differs from mean out-degree " +
                                               std::to_string(out));
  }
}

UnivariateDegreeDist UnivariateDegreeDist::from_entries(
    std::span<const std::pair<int, double>> entries, double tol) {
  std::map<int, double> table;
  double total = 0.0;
  for (const auto& [l, prob] : entries) {
    if (l < 0) throw Error(ErrorKind::kNegativeIndex, "negative index " + std::to_string(l));
    if (!(prob > 0.0) || !std::isfinite(prob)) {
      throw Error(ErrorKind::kNonPositiveProbability,
                  "probability at " + std::to_string(l) + " must be positive");
    }
    if (!table.emplace(l, prob).second) {
      throw Error(ErrorKind::kDuplicateKey, "duplicate index " + std::to_string(l));
    }
    total += prob;
  }
  if (table.empty() || std::abs(total - 1.0) > tol) {
    throw Error(ErrorKind::kNotNormalized,
                "probabilities sum to " + std::to_string(total) + ", expected 1");
  }
  return UnivariateDegreeDist(std::move(table));
}

double UnivariateDegreeDist::probability(int l) const {
  auto it = entries_.find(l);
  return it == entries_.end() ? 0.0 : it->second;
}

double UnivariateDegreeDist::moment(int order) const {
  if (order < 0) throw Error(ErrorKind::kNegativeIndex, "moment order must be nonnegative");
  double sum = 0.0;
  for (const auto& [l, prob] : entries_) sum += int_pow(l, order) * prob;
  return sum;
}

double UnivariateDegreeDist::total() const {
  double sum = 0.0;
  for (const auto& [l, prob] : entries_) sum += prob;
  return sum;
}

UnivariateDegreeDist undirected_projection(const BivariateDegreeDist& d) {
  std::map<int, double> table;
  for (const auto& [key, prob] : d.entries()) table[key.first + key.second] += prob;
  std::vector<std::pair<int, double>> entries(table.begin(), table.end());
  // The input already passed the normalization check; keep the same budget.
  return UnivariateDegreeDist::from_entries(entries, 2 * kNormalizationTol);
}

namespace {

BivariateDegreeDist size_biased(const BivariateDegreeDist& d, bool by_in_degree) {
  const double mean = by_in_degree ? moment(d, 1, 0) : moment(d, 0, 1);
  if (!(mean > 0.0)) {
    throw Error(ErrorKind::kZeroMeanDegree,
                by_in_degree ? "mean in-degree is zero" : "mean out-degree is zero");
  }
  std::vector<DegreeEntry> entries;
  for (const auto& [key, prob] : d.entries()) {
    const int weight = by_in_degree ? key.first : key.second;
    if (weight > 0) entries.push_back({key.first, key.second, weight * prob / mean});
  }
  return BivariateDegreeDist::from_entries(entries);
}

}  // namespace

BivariateDegreeDist size_biased_in(const BivariateDegreeDist& d) { return size_biased(d, true); }
BivariateDegreeDist size_biased_out(const BivariateDegreeDist& d) { return size_biased(d, false); }

}  // namespace weakgiant
