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

#include "weakgiant/gfsolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include "weakgiant/error.hpp"

namespace weakgiant {
namespace {

// sum coef * z^p * w^q, grouped by the w exponent q.
struct BivariatePolynomial {
  std::map<int, std::vector<std::pair<int, double>>> by_q;
  int max_p = 0;
  int max_q = 0;

  void add(int p, int q, double coef) {
    by_q[q].emplace_back(p, coef);
    max_p = std::max(max_p, p);
    max_q = std::max(max_q, q);
  }

  double operator()(double z, double w) const {
    double total = 0.0;
    for (const auto& [q, terms] : by_q) {
      double inner = 0.0;
      for (const auto& [p, coef] : terms) inner += coef * std::pow(z, p);
      total += inner * std::pow(w, q);
    }
    return total;
  }

  TruncatedSeries compose(const std::vector<TruncatedSeries>& pow_z,
                          const std::vector<TruncatedSeries>& pow_w) const {
    const int order = pow_z.front().order();
    TruncatedSeries total(order);
    for (const auto& [q, terms] : by_q) {
      TruncatedSeries inner(order);
      for (const auto& [p, coef] : terms) inner.add_scaled(pow_z[p], coef);
      total.add_scaled(q == 0 ? inner : inner * pow_w[q], 1.0);
    }
    return total;
  }
};

enum class Bias { kNone, kIn, kOut };

BivariatePolynomial polynomial(const BivariateDegreeDist& d, Bias bias) {
  BivariatePolynomial poly;
  const double mu_in = moment(d, 1, 0);
  const double mu_out = moment(d, 0, 1);
  for (const auto& [key, prob] : d.entries()) {
    const auto [n, k] = key;
    switch (bias) {
      case Bias::kNone:
        poly.add(n, k, prob);
        break;
      case Bias::kIn:
        if (n > 0) poly.add(n - 1, k, n * prob / mu_in);
        break;
      case Bias::kOut:
        if (k > 0) poly.add(n, k - 1, k * prob / mu_out);
        break;
    }
  }
  return poly;
}

std::vector<TruncatedSeries> powers(const TruncatedSeries& s, int max_power) {
  std::vector<TruncatedSeries> out;
  out.reserve(static_cast<std::size_t>(max_power) + 1);
  out.push_back(TruncatedSeries::constant(s.order(), 1.0));
  for (int p = 1; p <= max_power; ++p) out.push_back(out.back() * s);
  return out;
}

bool has_no_edges(const BivariateDegreeDist& d) {
  return !(moment(d, 1, 0) > 0.0) && !(moment(d, 0, 1) > 0.0);
}

[[noreturn]] void no_convergence(long iterations, double residual, double tol) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "no convergence after %ld iterations: residual %.6e > tol %.6e", iterations,
                residual, tol);
  throw Error(ErrorKind::kNoConvergence, buf);
}

}  // namespace

double generating_function(const BivariateDegreeDist& d, double z, double w) {
  return polynomial(d, Bias::kNone)(z, w);
}

double generating_function_in(const BivariateDegreeDist& d, double z, double w) {
  if (!(moment(d, 1, 0) > 0.0)) throw Error(ErrorKind::kZeroMeanDegree, "mean in-degree is zero");
  return polynomial(d, Bias::kIn)(z, w);
}

double generating_function_out(const BivariateDegreeDist& d, double z, double w) {
  if (!(moment(d, 0, 1) > 0.0)) throw Error(ErrorKind::kZeroMeanDegree, "mean out-degree is zero");
  return polynomial(d, Bias::kOut)(z, w);
}

FixedPointSolution interior_fixed_point(const BivariateDegreeDist& d,
                                        const SolverOptions& options) {
  require_edge_balance(d, options.balance_tol);
  FixedPointSolution sol;
  if (has_no_edges(d)) {
    if (options.trace) options.trace->emplace_back(1.0, 1.0);
    return sol;
  }
  const BivariatePolynomial u_in = polynomial(d, Bias::kIn);
  const BivariatePolynomial u_out = polynomial(d, Bias::kOut);

  double s_out = 0.0;
  double s_in = 0.0;
  if (options.trace) options.trace->emplace_back(s_out, s_in);
  double residual = 0.0;
  for (long it = 1; it <= options.max_iter; ++it) {
    // Both maps are nondecreasing on [0,1]^2, so iterates from the origin
    // increase monotonically to the smallest fixed point.
    const double next_out = std::min(1.0, u_out(s_out, s_in));
    const double next_in = std::min(1.0, u_in(s_out, s_in));
    if (next_out < s_out - 1e-14 || next_in < s_in - 1e-14) {
      throw std::logic_error("fixed-point iterates decreased");
    }
    residual = std::max(std::abs(next_out - s_out), std::abs(next_in - s_in));
    s_out = next_out;
    s_in = next_in;
    if (options.trace) options.trace->emplace_back(s_out, s_in);
    if (residual <= options.tol) {
      sol.s_out = s_out;
      sol.s_in = s_in;
      sol.iterations = it;
      sol.residual = residual;
      return sol;
    }
  }
  no_convergence(options.max_iter, residual, options.tol);
}

double giant_weak_fraction(const BivariateDegreeDist& d, const SolverOptions& options) {
  const FixedPointSolution sol = interior_fixed_point(d, options);
  const double finite = generating_function(d, sol.s_out, sol.s_in);
  return std::clamp(1.0 - finite, 0.0, 1.0);
}

TruncatedSeries weak_size_distribution(const BivariateDegreeDist& d, int order,
                                       const SolverOptions& options) {
  if (order < 1) throw Error(ErrorKind::kInvalidArgument, "truncation order must be >= 1");
  require_edge_balance(d, options.balance_tol);
  if (has_no_edges(d)) return TruncatedSeries::identity(order);

  const BivariatePolynomial u = polynomial(d, Bias::kNone);
  const BivariatePolynomial u_in = polynomial(d, Bias::kIn);
  const BivariatePolynomial u_out = polynomial(d, Bias::kOut);
  const int max_z = std::max({u.max_p, u_in.max_p, u_out.max_p});
  const int max_w = std::max({u.max_q, u_in.max_q, u_out.max_q});

  TruncatedSeries w_out(order);
  TruncatedSeries w_in(order);
  double change = 0.0;
  long it = 1;
  for (; it <= options.max_iter; ++it) {
    const auto pow_out = powers(w_out, max_z);
    const auto pow_in = powers(w_in, max_w);
    TruncatedSeries next_out = u_out.compose(pow_out, pow_in).shifted();
    TruncatedSeries next_in = u_in.compose(pow_out, pow_in).shifted();
    change = std::max(next_out.max_abs_difference(w_out), next_in.max_abs_difference(w_in));
    w_out = std::move(next_out);
    w_in = std::move(next_in);
    if (change <= options.tol) break;
  }
  if (change > options.tol) no_convergence(options.max_iter, change, options.tol);

  TruncatedSeries w = u.compose(powers(w_out, max_z), powers(w_in, max_w)).shifted();
  if (w.min_coefficient() < -1e-12) throw std::logic_error("negative size-series coefficient");
  for (int s = 0; s <= order; ++s) w[s] = std::max(0.0, w[s]);
  return w;
}

}  // namespace weakgiant
