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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weakgiant/criteria.hpp"
#include "weakgiant/error.hpp"
#include "weakgiant/gfsolver.hpp"
#include "weakgiant/mcgraph.hpp"

using namespace weakgiant;

namespace {

// Borel law of the undirected Poisson(c) component sizes.
double borel(double c, int s) {
  return std::exp(-c * s + (s - 1) * std::log(c * s) - std::lgamma(s + 1.0));
}

// Undirected Poisson giant fraction: S = 1 - exp(-c S).
double poisson_giant(double c) {
  double s = 1.0;
  for (int i = 0; i < 100000; ++i) s = 1.0 - std::exp(-c * s);
  return s;
}

}  // namespace

TEST_CASE("generating functions of the motif law") {
  const auto d = oracle::motif();
  CHECK(generating_function(d, 0.5, 0.5) == doctest::Approx(2.0 / 3.0 * 0.5 + 1.0 / 3.0 * 0.25));
  CHECK(generating_function_in(d, 0.3, 0.7) == doctest::Approx(1.0));
  CHECK(generating_function_out(d, 0.3, 0.7) == doctest::Approx(0.7));
}

TEST_CASE("subcritical motif law: trivial fixed point and exact size law") {
  const auto d = oracle::motif();
  const auto s = interior_fixed_point(d);
  CHECK(s.s_out == doctest::Approx(1.0));
  CHECK(s.s_in == doctest::Approx(1.0));
  CHECK(giant_weak_fraction(d) == doctest::Approx(0.0));

  const auto w = weak_size_distribution(d, 5);
  for (int i = 0; i <= 5; ++i) {
    CAPTURE(i);
    CHECK(std::abs(w[i] - (i == 3 ? 1.0 : 0.0)) <= 1e-9);
  }
}

TEST_CASE("2-in 2-out atom: zero fixed point and full giant") {
  const auto d = oracle::atom(2, 2);
  const auto s = interior_fixed_point(d);
  CHECK(s.s_out == 0.0);
  CHECK(s.s_in == 0.0);
  CHECK(giant_weak_fraction(d) == 1.0);
  const auto w = weak_size_distribution(d, 10);
  CHECK(w.sum() == doctest::Approx(0.0));
}

TEST_CASE("isolated vertices short-circuit") {
  const auto d = oracle::atom(0, 0);
  const auto s = interior_fixed_point(d);
  CHECK(s.s_out == 1.0);
  CHECK(s.s_in == 1.0);
  CHECK(giant_weak_fraction(d) == 0.0);
  const auto w = weak_size_distribution(d, 3);
  CHECK(w[1] == 1.0);
  CHECK(w[2] == 0.0);
  CHECK(w[3] == 0.0);
}

TEST_CASE("iterates are monotone and bounded") {
  for (double lambda : {0.3, 0.7, 1.5}) {
    std::vector<std::pair<double, double>> trace;
    SolverOptions opts;
    opts.trace = &trace;
    interior_fixed_point(oracle::double_poisson(lambda), opts);
    REQUIRE(trace.size() >= 2);
    CHECK(trace.front() == std::pair{0.0, 0.0});
    for (std::size_t i = 1; i < trace.size(); ++i) {
      CHECK(trace[i].first >= trace[i - 1].first);
      CHECK(trace[i].second >= trace[i - 1].second);
      CHECK(trace[i].first <= 1.0);
      CHECK(trace[i].second <= 1.0);
    }
  }
}

TEST_CASE("double Poisson law matches the undirected Poisson closed forms") {
  for (double lambda : {0.6, 0.75, 1.0, 2.0}) {
    CAPTURE(lambda);
    CHECK(giant_weak_fraction(oracle::double_poisson(lambda)) ==
          doctest::Approx(poisson_giant(2 * lambda)).epsilon(1e-9));
  }
  for (double lambda : {0.1, 0.25, 0.4}) {
    const auto w = weak_size_distribution(oracle::double_poisson(lambda), 20);
    for (int s = 1; s <= 20; ++s) {
      CAPTURE(lambda);
      CAPTURE(s);
      CHECK(std::abs(w[s] - borel(2 * lambda, s)) <= 1e-9);
    }
  }
}

TEST_CASE("giant fraction of the double Poisson law at 0.75 matches simulation") {
  const auto d = oracle::double_poisson(0.75);
  const double predicted = giant_weak_fraction(d);
  CHECK(predicted > 0.0);
  CHECK(predicted < 1.0);
  const double observed = largest_weak_fraction(sample_configuration(d, 100000, 5));
  CHECK(std::abs(predicted - observed) <= 0.01);
}

TEST_CASE("size law mean converges to the closed-form mean") {
  for (const auto& d : {oracle::motif(), oracle::double_poisson(0.25), oracle::double_poisson(0.1)}) {
    const auto w = weak_size_distribution(d, 200);
    double mean = 0.0;
    for (int s = 1; s <= 200; ++s) mean += s * w[s];
    CHECK(std::abs(mean - mean_weak_component_size(d)) <= 1e-9);
  }
}

TEST_CASE("size law mass deficit equals the giant fraction") {
  const auto d = oracle::double_poisson(0.8);
  const auto w = weak_size_distribution(d, 400);
  CHECK(w.sum() <= 1.0 + 1e-9);
  CHECK(1.0 - w.sum() == doctest::Approx(giant_weak_fraction(d)).epsilon(1e-6));
}

TEST_CASE("solver agrees with the criteria away from the boundary") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto d = trial % 2 ? oracle::random_balanced(rng, 5, 1 + trial % 5)
                             : oracle::random_balanced_skewed(rng, 5, 1 + trial % 5);
    const double mu = moment_set(d).mean();
    const double dd = criticality_determinant(d);
    if (mu == 0.0 || std::abs(dd) <= 0.05 * mu * mu) continue;
    CAPTURE(trial);
    ++checked;
    CHECK((giant_weak_fraction(d) > 1e-6) == has_giant_weak(d));
    const auto w = weak_size_distribution(d, 40);
    CHECK(w.min_coefficient() >= 0.0);
    CHECK(w.sum() <= 1.0 + 1e-9);
  }
  CHECK(checked >= 100);
}

TEST_CASE("forced non-convergence reports diagnostics") {
  SolverOptions opts;
  opts.max_iter = 10;
  try {
    interior_fixed_point(oracle::double_poisson(0.5), opts);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoConvergence);
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
  CHECK_THROWS_AS(weak_size_distribution(oracle::double_poisson(0.5), 50, opts), Error);
}

TEST_CASE("unbalanced laws are refused") {
  CHECK_THROWS_AS(interior_fixed_point(oracle::atom(2, 1)), Error);
  CHECK_THROWS_AS(weak_size_distribution(oracle::atom(2, 1), 5), Error);
}
