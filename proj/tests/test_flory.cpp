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

#include "weakgiant/error.hpp"
#include "weakgiant/evolution.hpp"
#include "weakgiant/flory.hpp"
#include "weakgiant/mcgraph.hpp"

using namespace weakgiant;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kParse;
}

FloryMixture random_mixture(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> n(2, 6);
  for (;;) {
    const double a = u(rng);
    const double b = u(rng);
    const double c = u(rng);
    const double s = a + b + c;
    FloryMixture m{a / s, b / s, 1.0 - a / s - b / s, n(rng)};
    if (m.f3 >= 0.0 && m.f2 > 1e-3 && m.f1 + m.f3 > 1e-3) return m;
  }
}

}  // namespace

TEST_CASE("stoichiometric A3 + B2 mixture") {
  const FloryMixture mix{0.0, 0.6, 0.4, 3};
  const auto p = to_bound_dist(mix);
  CHECK(p.entries().size() == 2);
  CHECK(p.table().probability(0, 2) == doctest::Approx(0.6));
  CHECK(p.table().probability(3, 0) == doctest::Approx(0.4));

  const auto nu = nu_moments(p);
  CHECK(nu.nu10 == doctest::Approx(1.2));
  CHECK(nu.nu01 == doctest::Approx(1.2));
  CHECK(nu.nu20 == doctest::Approx(3.6));
  CHECK(nu.nu02 == doctest::Approx(2.4));
  CHECK(nu.nu11 == 0.0);

  const auto fp = flory_parameters(mix);
  CHECK(fp.alpha_c == doctest::Approx(0.5));
  CHECK(fp.rho == doctest::Approx(1.0));
  CHECK(fp.r == doctest::Approx(1.0));

  const auto gel = gel_conversion(mix);
  REQUIRE(gel.has_value());
  CHECK(std::abs(*gel - 1.0 / std::sqrt(2.0)) <= 1e-12);
  const auto crit = critical_conversion(p);
  REQUIRE(crit.has_value());
  CHECK(std::abs(*gel - crit->c_n) <= 1e-12);

  const auto pa = gel_point_pA(fp);
  CHECK(std::abs(pa.p_A - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(pa.p_B - 1.0 / std::sqrt(2.0)) <= 1e-12);

  CHECK(alpha_of(0.8, fp) == doctest::Approx(0.64));
  CHECK(is_gelled(0.8, fp));
  CHECK(alpha_of(0.0, fp) == 0.0);
  CHECK_FALSE(is_gelled(0.0, fp));
  CHECK(alpha_of(pa.p_A, fp) == doctest::Approx(fp.alpha_c).epsilon(1e-14));
  CHECK_FALSE(is_gelled(pa.p_A, fp));
}

TEST_CASE("linear mixtures never gel in finite time") {
  const FloryMixture lin{0.5, 0.5, 0.0, 2};
  const auto p = to_bound_dist(lin);
  CHECK(p.entries().size() == 2);
  CHECK(p.table().probability(2, 0) == doctest::Approx(0.5));
  CHECK(p.table().probability(0, 2) == doctest::Approx(0.5));
  CHECK(gel_threshold(lin) == doctest::Approx(1.0));
  CHECK_FALSE(gel_conversion(lin).has_value());
  CHECK(transition_class(p).kind == TransitionKind::kAsymptotic);

  const FloryMixture bifunctional{0.0, 0.5, 0.5, 2};
  CHECK(gel_threshold(bifunctional) == doctest::Approx(1.0));
  CHECK_FALSE(gel_conversion(bifunctional).has_value());
  CHECK(to_bound_dist(bifunctional).entries().size() == 2);

  // n = 2 merges the branched atom into the A-A atom.
  const auto merged = to_bound_dist({0.3, 0.5, 0.2, 2});
  CHECK(merged.entries().size() == 2);
  CHECK(merged.table().probability(2, 0) == doctest::Approx(0.5));
}

TEST_CASE("Flory parameters") {
  const auto fp = flory_parameters({0.4, 0.5, 0.1, 3});
  CHECK(fp.alpha_c == doctest::Approx(0.5));
  CHECK(fp.rho == doctest::Approx(0.3 / 1.1));
  CHECK(fp.r == doctest::Approx(1.1));
  CHECK(flory_parameters({0.4, 0.5, 0.1, 2}).alpha_c == 1.0);

  const FloryParameters unit{0.25, 1.0, 1.0};
  CHECK(gel_point_pA(unit).p_A == doctest::Approx(0.5));
  const FloryParameters any{0.3, 0.4, 1.7};
  const auto g = gel_point_pA(any);
  CHECK(g.p_B == g.p_A * any.r);
}

TEST_CASE("invalid mixtures") {
  CHECK(kind_of([] { validate({0.3, 0.3, 0.3, 3}); }) == ErrorKind::kInvalidMixture);
  CHECK(kind_of([] { validate({-0.1, 0.6, 0.5, 3}); }) == ErrorKind::kInvalidMixture);
  CHECK(kind_of([] { validate({0.2, 0.4, 0.4, 1}); }) == ErrorKind::kInvalidMixture);
  CHECK(kind_of([] { to_bound_dist({1.0, 0.0, 0.0, 3}); }) == ErrorKind::kNoReactivePair);
  CHECK(kind_of([] { to_bound_dist({0.0, 1.0, 0.0, 3}); }) == ErrorKind::kNoReactivePair);
  CHECK(kind_of([] { flory_parameters({0.5, 0.0, 0.5, 3}); }) == ErrorKind::kDegenerateMixture);
  CHECK(kind_of([] { gel_conversion({0.5, 0.0, 0.5, 3}); }) == ErrorKind::kDegenerateMixture);
}

TEST_CASE("reduction identities over random mixtures") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const auto mix = random_mixture(rng);
    CAPTURE(mix.f1);
    CAPTURE(mix.f2);
    CAPTURE(mix.f3);
    CAPTURE(mix.n);
    const auto p = to_bound_dist(mix);
    const auto nu = nu_moments(p);
    CHECK(nu.nu10 == doctest::Approx(2 * mix.f1 + mix.n * mix.f3));
    CHECK(nu.nu01 == doctest::Approx(2 * mix.f2));
    CHECK(nu.nu20 == doctest::Approx(4 * mix.f1 + mix.n * mix.n * mix.f3));
    CHECK(nu.nu02 == doctest::Approx(4 * mix.f2));
    CHECK(nu.nu11 == 0.0);

    const auto crit = critical_conversion(p);
    REQUIRE(crit.has_value());
    CHECK(std::abs(gel_threshold(mix) - crit->c_n) <= 1e-12);
    const auto gel = gel_conversion(mix);
    CHECK(gel.has_value() == (transition_class(p).kind == TransitionKind::kFiniteTime));
    if (gel) CHECK(std::abs(*gel - crit->c_n) <= 1e-12);

    const auto fp = flory_parameters(mix);
    const auto pa = gel_point_pA(fp);
    CHECK(std::abs(pa.p_A - gel_threshold(mix)) <= 1e-12);
    CHECK(std::abs(pa.p_B - crit->c_k) <= 1e-12);
    for (double x : {0.1, 0.5, 0.9}) {
      CHECK(std::abs(alpha_of(x, fp) - alpha_of_pB(x * fp.r, fp)) <= 1e-12);
    }
  }
}

TEST_CASE("simulated gel point of the A3 + B2 mixture") {
  const auto p = to_bound_dist({0.0, 0.6, 0.4, 3});
  const auto before = kmc_simulate(p, 100000, 1, KmcStop::at_conversion(0.6));
  CHECK(largest_weak_fraction(before.graph) < 0.01);
  const auto after = kmc_simulate(p, 100000, 2, KmcStop::at_conversion(0.8));
  CHECK(largest_weak_fraction(after.graph) > 0.05);
}
