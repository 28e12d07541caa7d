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

#include "weakgiant/series.hpp"

#include <algorithm>
#include <cmath>

#include "weakgiant/error.hpp"

namespace weakgiant {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorKind::kInvalidArgument, "series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

TruncatedSeries TruncatedSeries::constant(int order, double value) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  const int n = std::min(order_, other.order_);
  TruncatedSeries out(n);
  // Skip leading zeros; the component-size series all start at z^1 or later.
  int lo_a = 0;
  while (lo_a <= n && coeffs_[lo_a] == 0.0) ++lo_a;
  int lo_b = 0;
  while (lo_b <= n && other.coeffs_[lo_b] == 0.0) ++lo_b;
  for (int i = lo_a; i <= n; ++i) {
    const double a = coeffs_[i];
    if (a == 0.0) continue;
    for (int j = lo_b; i + j <= n; ++j) out.coeffs_[i + j] += a * other.coeffs_[j];
  }
  return out;
}

void TruncatedSeries::add_scaled(const TruncatedSeries& other, double scale) {
  const int n = std::min(order_, other.order_);
  for (int i = 0; i <= n; ++i) coeffs_[i] += scale * other.coeffs_[i];
}

TruncatedSeries TruncatedSeries::shifted() const {
  TruncatedSeries out(order_);
  for (int i = 0; i < order_; ++i) out.coeffs_[i + 1] = coeffs_[i];
  return out;
}

double TruncatedSeries::sum() const {
  double s = 0.0;
  for (double c : coeffs_) s += c;
  return s;
}

double TruncatedSeries::max_abs_difference(const TruncatedSeries& other) const {
  const int n = std::max(order_, other.order_);
  double diff = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double a = i <= order_ ? coeffs_[i] : 0.0;
    const double b = i <= other.order_ ? other.coeffs_[i] : 0.0;
    diff = std::max(diff, std::abs(a - b));
  }
  return diff;
}

double TruncatedSeries::min_coefficient() const {
  return *std::min_element(coeffs_.begin(), coeffs_.end());
}

}  // namespace weakgiant
