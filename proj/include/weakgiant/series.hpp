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
#include <span>
#include <vector>

namespace weakgiant {

/// Power series c[0] + c[1] z + ... + c[N] z^N; every product is truncated
/// at the same order N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  static TruncatedSeries constant(int order, double value);
  // z^1
  static TruncatedSeries identity(int order);

  int order() const noexcept { return order_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  double& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

  // Truncated Cauchy product.
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  // this += scale * other
  void add_scaled(const TruncatedSeries& other, double scale);
  // Multiply by z, dropping the coefficient pushed past the order.
  TruncatedSeries shifted() const;

  double sum() const;
  double max_abs_difference(const TruncatedSeries& other) const;
  double min_coefficient() const;

 private:
  int order_;
  std::vector<double> coeffs_;
};

}  // namespace weakgiant
