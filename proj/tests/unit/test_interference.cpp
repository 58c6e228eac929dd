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
#include <random>

#include "doctest.h"
#include "support/check.hpp"
#include "support/oracles.hpp"
#include "twomode/interference.hpp"
#include "twomode/random_states.hpp"

using namespace twomode;

namespace {

std::vector<oracle::Bump> bumps_of(const ModeDistribution& f) {
  std::vector<oracle::Bump> out;
  auto push = [&](const Vec& c, double q, double w) {
    out.push_back({std::vector<double>(c.begin(), c.end()), q, w});
  };
  if (const auto* g = f.as_gaussian()) {
    push(g->center, g->width, 1.0);
  } else {
    for (const auto& c : std::get<GaussianMixture>(f.variant()).components) {
      push(c.center, c.width, c.weight);
    }
  }
  return out;
}

// Detection density built directly from the one-particle amplitudes.
double oracle_detection(const TwoParticleState& s, const Vec& r) {
  const std::vector<double> rv(r.begin(), r.end());
  const double hbar = s.config().hbar;
  const auto fb = bumps_of(s.f());
  const auto gb = bumps_of(s.g());
  const auto a = oracle::mixture_amplitude(fb, rv, hbar);
  const auto b = oracle::mixture_amplitude(gb, rv, hbar);
  const double beta = oracle::mixture_overlap(fb, gb);
  const double sign = s.statistics() == Statistics::Boson ? 1.0 : -1.0;
  return (2.0 * beta * std::real(std::conj(a) * b) + sign * (std::norm(a) + std::norm(b))) /
         (sign + beta * beta);
}

TwoParticleState gaussians(double delta, Statistics stats, int d = 1, double q = 1.0,
                           double hbar = 1.0) {
  const PhysicalConfig c{hbar, d};
  Vec g(d);
  g[0] = delta;
  return TwoParticleState(make_gaussian(Vec(d), q, c), make_gaussian(g, q, c), stats, c);
}

}  // namespace

TEST_CASE("inner product of the two-particle state") {
  const auto boson = gaussians(0.0, Statistics::Boson);
  CHECK(inner_product(boson, default_mode_grid(boson)) == doctest::Approx(2.0));
  const auto fermion = gaussians(0.0, Statistics::Fermion);
  CHECK(inner_product(fermion, default_mode_grid(fermion)) == 0.0);
  const auto apart = gaussians(2.0, Statistics::Fermion);
  const double v = inner_product(apart, default_mode_grid(apart));
  CHECK(v == doctest::Approx(-1.0 + std::exp(-4.0)).epsilon(1e-12));
  CHECK(v == doctest::Approx(-0.98168).epsilon(1e-5));
  CHECK(std::abs(inner_product(apart, default_mode_grid(apart), Evaluation::Quadrature) - v) <= 1e-6);
}

TEST_CASE("boson f = g at the origin") {
  const auto s = gaussians(0.0, Statistics::Boson);
  const auto b = detection_breakdown(s, Vec{0.0}, default_mode_grid(s));
  CHECK(b.p == doctest::Approx(2.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
  CHECK(b.p == doctest::Approx(0.79788).epsilon(1e-5));
  const auto q = detection_breakdown(s, Vec{0.0}, default_mode_grid(s), Evaluation::Quadrature);
  CHECK(std::abs(q.p - b.p) <= 1e-6);
}

TEST_CASE("no common modes: interference term vanishes") {
  std::mt19937_64 rng(4);
  for (auto stats : {Statistics::Boson, Statistics::Fermion}) {
    const PhysicalConfig c{1.0, 1};
    const auto s = disjoint_state(rng, stats, c);
    const auto& grid = std::get<GridSampled>(s.f().variant()).grid;
    for (double x : {-1.0, 0.0, 0.4, 2.0}) {
      const auto b = detection_breakdown(s, Vec{x}, grid);
      CHECK(b.beta_fg == 0.0);
      CHECK(std::abs(b.alpha_ff) == 1.0);
      CHECK(std::abs(b.alpha_gg) == 1.0);
      CHECK(b.alpha_fg == 0.0);
      CHECK(b.p == doctest::Approx(b.p0).epsilon(1e-15));
      CHECK(b.p == doctest::Approx(b.p_ff + b.p_gg).epsilon(1e-15));
    }
  }
}

TEST_CASE("fermions with f = g are indeterminate") {
  const auto s = gaussians(0.0, Statistics::Fermion);
  CHECK_ERROR_KIND(detection_breakdown(s, Vec{0.3}, default_mode_grid(s)),
                   ErrorKind::IndeterminateState);
  const DetectionModel model(s, default_mode_grid(s));
  CHECK(model.indeterminate());
  CHECK(model.density_f(Vec{0.3}) > 0.0);
  // Just outside the threshold the value is computed.
  const auto near = gaussians(1e-3, Statistics::Fermion);
  CHECK_NOTHROW(detection_breakdown(near, Vec{0.3}, default_mode_grid(near)));
}

TEST_CASE("detection matches the amplitude oracle") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 40; ++k) {
    const int d = 1 + k % 3;
    const PhysicalConfig c{k % 4 == 0 ? 0.6 : 1.0, d};
    const auto stats = k % 2 ? Statistics::Fermion : Statistics::Boson;
    const auto s = random_state(rng, stats, c, 0.0);
    const Vec r = random_point(rng, d, 2.0);
    const auto grid = default_mode_grid(s, 2.0);
    const auto b = detection_breakdown(s, r, grid);
    const double want = oracle_detection(s, r);
    CHECK(std::abs(b.p - want) <= 1e-6 * (1.0 + std::abs(want)));
    CHECK_FALSE(b.truncation_warning);
    const auto q = detection_breakdown(s, r, grid, Evaluation::Quadrature);
    CHECK(std::abs(q.p - want) <= 1e-6 * (1.0 + std::abs(want)));
    CHECK_FALSE(q.truncation_warning);
  }
}

TEST_CASE("total detection probability is two") {
  for (auto stats : {Statistics::Boson, Statistics::Fermion}) {
    for (double delta : {0.5, 1.0, 2.0, 3.0}) {
      const auto s = gaussians(delta, stats);
      const auto pos = default_position_grid(s);
      const auto total = spatial_total(s, pos, default_mode_grid(s, pos.axis(0).upper));
      CHECK(total.value == doctest::Approx(2.0).epsilon(1e-4));
      CHECK_FALSE(total.truncation_warning);
    }
  }
  std::mt19937_64 rng(9);
  const auto s = disjoint_state(rng, Statistics::Fermion, PhysicalConfig{1.0, 1});
  const auto& mode = std::get<GridSampled>(s.f().variant()).grid;
  const auto total = spatial_total(s, default_position_grid(s), mode);
  CHECK(total.value == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("property sweep over random states") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const int d = 1 + k % 2;
    const PhysicalConfig c{1.0, d};
    const auto stats = k % 2 ? Statistics::Fermion : Statistics::Boson;
    const auto s = random_state(rng, stats, c);
    const auto grid = default_mode_grid(s, 3.0);
    const DetectionModel model(s, grid);
    if (stats == Statistics::Fermion) CHECK(model.inner_product() <= 1e-12);
    CHECK(model.beta() <= 1.0 + 1e-12);
    if (model.indeterminate()) continue;
    const auto b = model.breakdown(random_point(rng, d, 3.0));
    CHECK(b.p >= -1e-12);
    CHECK(b.p_ff >= 0.0);
    CHECK(b.p_gg >= 0.0);
    // |Re P_fg| <= sqrt(P_ff P_gg)
    CHECK(std::abs(b.re_p_fg) <= std::sqrt(b.p_ff * b.p_gg) * (1.0 + 1e-12) + 1e-300);
  }
}

TEST_CASE("interference term oscillates with separation") {
  // For equal-width Gaussians the cross term carries cos(delta * r / hbar).
  for (double hbar : {1.0, 0.5}) {
    const double delta = 1.5;
    const auto s = gaussians(delta, Statistics::Boson, 1, 1.0, hbar);
    const DetectionModel model(s, default_mode_grid(s, 10.0));
    for (int k = 0; k < 3; ++k) {
      const double x = (std::numbers::pi / 2.0 + k * std::numbers::pi) * hbar / delta;
      const auto b = model.breakdown(Vec{x});
      CHECK(std::abs(b.p - b.p0) <= 1e-12 * b.p0);
    }
    const double x_min = std::numbers::pi * hbar / delta;
    const auto dip = model.breakdown(Vec{x_min});
    CHECK(dip.p < dip.p0);
    const auto peak = model.breakdown(Vec{0.0});
    CHECK(peak.p > peak.p0);
  }
}

TEST_CASE("swapping f and g leaves the detection probability unchanged") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20; ++k) {
    const PhysicalConfig c{1.0, 2};
    const auto stats = k % 2 ? Statistics::Fermion : Statistics::Boson;
    const auto s = random_state(rng, stats, c, 0.0);
    const TwoParticleState swapped(s.g(), s.f(), stats, c);
    const Vec r = random_point(rng, 2, 2.0);
    const auto grid = default_mode_grid(s, 2.0);
    CHECK(detection_breakdown(s, r, grid).p ==
          doctest::Approx(detection_breakdown(swapped, r, grid).p).epsilon(1e-12));
  }
}
