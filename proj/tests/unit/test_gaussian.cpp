// Copyright 2026 The twomode Authors
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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support/check.hpp"
#include "support/oracles.hpp"
#include "twomode/gaussian.hpp"
#include "twomode/interference.hpp"
#include "twomode/measures.hpp"

using namespace twomode;

namespace {

GaussianPair pair_1d(double delta, Statistics stats, double q = 1.0, double hbar = 1.0) {
  return {Vec{0.0}, Vec{delta}, q, PhysicalConfig{hbar, 1}, stats};
}

TwoParticleState state_of(const GaussianPair& p) {
  return TwoParticleState(make_gaussian(p.f_center, p.width, p.config),
                          make_gaussian(p.g_center, p.width, p.config), p.statistics, p.config);
}

}  // namespace

TEST_CASE("closed overlap, norm and distinguishability") {
  CHECK(closed_beta(pair_1d(0.0, Statistics::Boson)) == 1.0);
  CHECK(closed_beta(pair_1d(std::sqrt(2.0 * std::log(2.0)), Statistics::Boson)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(closed_beta(pair_1d(2.0, Statistics::Boson)) == doctest::Approx(std::exp(-2.0)));
  CHECK(closed_inner(pair_1d(0.0, Statistics::Boson)) == 2.0);
  CHECK(closed_inner(pair_1d(0.0, Statistics::Fermion)) == 0.0);
  CHECK(closed_inner(pair_1d(2.0, Statistics::Fermion)) == doctest::Approx(-0.98168).epsilon(1e-5));
  CHECK(closed_distinguishability(pair_1d(0.0, Statistics::Boson)) == 0.0);
  CHECK(closed_distinguishability(pair_1d(2.0, Statistics::Boson)) ==
        doctest::Approx(0.86466).epsilon(1e-5));
  CHECK(closed_distinguishability(pair_1d(12.0, Statistics::Boson)) == doctest::Approx(1.0));

  const auto p = pair_1d(2.0, Statistics::Boson);
  const auto s = state_of(p);
  const auto grid = default_mode_grid(s);
  CHECK(std::abs(closed_beta(p) - overlap_integral(s.f(), s.g(), grid, Evaluation::Quadrature).value) <= 1e-6);
  CHECK(std::abs(closed_distinguishability(p) -
                 distinguishability(s.f(), s.g(), grid, Evaluation::Quadrature)) <= 1e-6);
  CHECK_ERROR_KIND(closed_beta(pair_1d(1.0, Statistics::Boson, -1.0)), ErrorKind::InvalidParameter);
}

TEST_CASE("closed detection values") {
  const auto same = pair_1d(0.0, Statistics::Boson);
  CHECK(closed_detection(same, Vec{0.0}) ==
        doctest::Approx(2.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
  const auto apart = pair_1d(2.0, Statistics::Boson);
  CHECK(detection_ratio(apart, Vec{0.0}) ==
        doctest::Approx((1.0 + std::exp(-2.0)) / (1.0 + std::exp(-4.0))));
  CHECK(detection_ratio(apart, Vec{0.0}) == doctest::Approx(1.114915).epsilon(1e-6));
  // delta * r / hbar = pi puts the cosine at -1: below the beta = 0 ratio of 1.
  CHECK(detection_ratio(apart, Vec{std::numbers::pi / 2.0}) < 1.0);
  CHECK_ERROR_KIND(closed_detection(pair_1d(0.0, Statistics::Fermion), Vec{0.0}),
                   ErrorKind::IndeterminateState);
}

TEST_CASE("closed forms agree with quadrature on a 5x5 matrix") {
  for (auto stats : {Statistics::Boson, Statistics::Fermion}) {
    for (double delta : {0.0, 1.0, 2.0, 3.0, 4.0}) {
      const double d_eff = stats == Statistics::Fermion && delta < 0.5 ? 0.5 : delta;
      const auto p = pair_1d(d_eff, stats);
      const auto s = state_of(p);
      const auto grid = default_mode_grid(s, 4.0);
      const DetectionModel model(s, grid, Evaluation::Quadrature);
      CHECK(std::abs(model.beta() - closed_beta(p)) <= 1e-6);
      CHECK(std::abs(model.inner_product() - closed_inner(p)) <= 1e-6 * std::abs(closed_inner(p)));
      for (double r : {0.0, 1.0, 2.0, 3.0, 4.0}) {
        const double want = closed_detection(p, Vec{r});
        const auto b = model.breakdown(Vec{r});
        CHECK(std::abs(b.p - want) <= 1e-6 * std::max(want, 1e-3));
        CHECK_FALSE(b.truncation_warning);
      }
    }
  }
}

TEST_CASE("detection prefactor normalizes the density") {
  for (int d = 1; d <= 3; ++d) {
    const PhysicalConfig c{0.8, d};
    const double q = 1.3;
    const double k = detection_prefactor(q, c);
    // integral of K exp(-Q^2 r^2 / 2 hbar^2) over R^d is 2
    const double integral = k * std::pow(2.0 * std::numbers::pi * c.hbar * c.hbar / (q * q), d / 2.0);
    CHECK(integral == doctest::Approx(2.0).epsilon(1e-14));
  }
  // The unnormalized 3D prefactor differs from K(3) by pi^{3/2} / 2.
  const double ratio = unnormalized_detection_prefactor(1.0, 1.0) / detection_prefactor(1.0, PhysicalConfig{1.0, 3});
  CHECK(ratio == doctest::Approx(std::pow(std::numbers::pi, 1.5) / 2.0).epsilon(1e-14));
}

TEST_CASE("fermion ratio near coincidence") {
  const double x1 = 1.7;
  const Vec r{x1, 0.0, 0.0};
  const double f = fermion_ratio(Vec{1e-3, 0.0, 0.0}, r, 1.0, 1.0);
  CHECK(std::abs(f - 0.5 * (1.0 + x1 * x1)) <= 1e-4);
  CHECK(fermion_ratio(Vec{0.0, 1e-3, 0.0}, Vec(3), 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fermion_ratio(Vec{8.0, 0.0, 0.0}, r, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_ERROR_KIND(fermion_ratio(Vec(3), r, 1.0, 1.0), ErrorKind::IndeterminateState);

  // Away from the singular point the stable form equals the naive quotient.
  for (double t : {0.3, 1.0, 2.5}) {
    const double naive = oracle::fermion_numerator(t, t * 0 + x1, 1.0, 1.0) /
                         oracle::fermion_denominator(t, 1.0);
    CHECK(fermion_ratio(Vec{t, 0.0, 0.0}, r, 1.0, 1.0) == doctest::Approx(naive).epsilon(1e-12));
  }
}

TEST_CASE("directional limits") {
  const Vec r{2.0, 0.0, 0.0};
  CHECK(lhopital_limit(Vec{1.0, 0.0, 0.0}, r, 1.0, 1.0) == 2.5);
  CHECK(lhopital_limit(Vec{0.0, 1.0, 0.0}, r, 1.0, 1.0) == 0.5);
  CHECK(lhopital_limit(Vec{1.0, 0.0, 0.0}, r, 1.0, 1.0) -
            lhopital_limit(Vec{0.0, 1.0, 0.0}, r, 1.0, 1.0) ==
        2.0);
  const Vec diag = Vec{1.0, 1.0, 1.0} * (1.0 / std::sqrt(3.0));
  CHECK(lhopital_limit(diag, Vec(3), 1.0, 1.0) == 0.5);
  CHECK_ERROR_KIND(lhopital_limit(Vec{1.0, 1.0, 0.0}, r, 1.0, 1.0), ErrorKind::InvalidParameter);
  const auto dl = directional_limit(Vec{1.0, 0.0, 0.0}, r, 1.0, 1.0);
  CHECK(dl.limit_value == 2.5);
}

TEST_CASE("second-derivative quotient matches finite differences") {
  for (double ur : {0.0, 0.5, 2.0}) {
    for (double q : {0.7, 1.0, 1.6}) {
      const double hbar = 0.9;
      const double h = 1e-3;
      auto fd2 = [&](auto fn) { return (fn(h) - 2.0 * fn(0.0) + fn(-h)) / (h * h); };
      const double n2 = fd2([&](double t) { return oracle::fermion_numerator(t, ur, q, hbar); });
      const double d2 = fd2([&](double t) { return oracle::fermion_denominator(t, q); });
      CHECK(n2 == doctest::Approx(oracle::fermion_numerator_dd(ur, q, hbar)).epsilon(1e-4));
      CHECK(d2 == doctest::Approx(oracle::fermion_denominator_dd(q)).epsilon(1e-4));
      const double quotient = oracle::fermion_numerator_dd(ur, q, hbar) / oracle::fermion_denominator_dd(q);
      CHECK(lhopital_limit(Vec{1.0}, Vec{ur}, q, hbar) == doctest::Approx(quotient).epsilon(1e-14));
    }
  }
}

TEST_CASE("residuals decay quadratically") {
  const Vec r{2.0, 0.5, 0.0};
  for (const Vec& u : {Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0}, Vec{0.6, 0.8, 0.0}}) {
    const double limit = lhopital_limit(u, r, 1.0, 1.0);
    double previous = 0.0;
    for (double t : {1e-1, 1e-2, 1e-3}) {
      const double res = std::abs(fermion_ratio(u * t, r, 1.0, 1.0) - limit);
      if (previous > 0.0) {
        CHECK(res / previous == doctest::Approx(1e-2).epsilon(0.05));
      }
      previous = res;
    }
  }
}
