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
#include "twomode/distribution.hpp"
#include "twomode/grid.hpp"
#include "twomode/random_states.hpp"
#include "twomode/state.hpp"

using namespace twomode;

namespace {

QuadratureGrid line(double half, std::size_t n) { return QuadratureGrid::cube(1, {-half, half}, n); }

}  // namespace

TEST_CASE("vec arithmetic and dimension checks") {
  const Vec a{1.0, 2.0, 2.0};
  CHECK(a.norm() == doctest::Approx(3.0));
  CHECK((a - a).norm2() == 0.0);
  CHECK(Vec::unit(3, 1) == Vec{0.0, 1.0, 0.0});
  CHECK_ERROR_KIND(Vec(4), ErrorKind::InvalidParameter);
  CHECK_ERROR_KIND(Vec(0), ErrorKind::InvalidParameter);
  CHECK_ERROR_KIND(a.dot(Vec{1.0}), ErrorKind::InvalidParameter);
}

TEST_CASE("physical config validation") {
  CHECK_NOTHROW(PhysicalConfig{}.validate());
  CHECK_ERROR_KIND((PhysicalConfig{0.0, 1}.validate()), ErrorKind::InvalidParameter);
  CHECK_ERROR_KIND((PhysicalConfig{1.0, 4}.validate()), ErrorKind::InvalidParameter);
  CHECK(parse_statistics("fermion") == Statistics::Fermion);
  CHECK_ERROR_KIND(parse_statistics("anyon"), ErrorKind::InvalidParameter);
}

TEST_CASE("grid weights sum to the box volume") {
  for (auto rule : {QuadratureRule::Trapezoid, QuadratureRule::Midpoint}) {
    const QuadratureGrid g({{-1.0, 2.0}, {0.0, 0.5}}, 17, rule);
    double s = 0.0;
    for (double w : g.weights()) s += w;
    CHECK(s == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(g.volume() == doctest::Approx(1.5));
    // last axis fastest
    CHECK(g.node(1)[1] > g.node(0)[1]);
    CHECK(g.node(1)[0] == g.node(0)[0]);
  }
  CHECK_ERROR_KIND(QuadratureGrid::cube(1, {1.0, 0.0}, 10), ErrorKind::InvalidParameter);
}

TEST_CASE("gaussian normalization constant") {
  const PhysicalConfig c3{1.0, 3};
  CHECK(gaussian_normalization(1.0, 3) == doctest::Approx(std::pow(2.0 / std::numbers::pi, 0.75)));
  CHECK(gaussian_normalization(1.0, 3) == doctest::Approx(0.7127).epsilon(1e-4));
  const auto f = make_gaussian(Vec(3), 1.0, c3);
  CHECK(f(Vec(3)) == doctest::Approx(0.712705).epsilon(1e-6));
  const auto grid = QuadratureGrid::cube(3, {-6.0, 6.0}, 97);
  const auto report = validate_distribution(f, grid);
  CHECK(report.ok);
  CHECK(report.norm_value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("invalid widths are rejected") {
  const PhysicalConfig c{1.0, 1};
  CHECK_ERROR_KIND(make_gaussian(Vec(1), -1.0, c), ErrorKind::InvalidParameter);
  CHECK_ERROR_KIND(make_gaussian(Vec(1), 0.0, c), ErrorKind::InvalidParameter);
  CHECK_ERROR_KIND(make_gaussian(Vec(2), 1.0, c), ErrorKind::InvalidParameter);
  CHECK_ERROR_KIND(make_mixture({{Vec(1), 1.0, -0.5}}, c), ErrorKind::InvalidParameter);
  CHECK_ERROR_KIND(make_mixture({{Vec(1), 1.0, 0.0}}, c), ErrorKind::DegenerateDistribution);
}

TEST_CASE("validation of grid-sampled distributions") {
  const auto grid = line(1.0, 5);  // weights 0.25, 0.5, 0.5, 0.5, 0.25
  SUBCASE("negative value") {
    const auto f = make_grid_sampled(grid, {0.0, 1.0, -1.0, 1.0, 0.0});
    const auto r = validate_distribution(f, grid);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.is_nonnegative);
  }
  SUBCASE("norm four") {
    const auto f = make_grid_sampled(grid, std::vector<double>(5, std::sqrt(4.0 / 2.0)));
    const auto r = validate_distribution(f, grid);
    CHECK_FALSE(r.ok);
    CHECK(r.is_nonnegative);
    CHECK(r.norm_value == doctest::Approx(4.0));
  }
}

TEST_CASE("renormalize") {
  const auto grid = line(1.0, 5);
  const std::vector<double> shape{0.0, 1.0, 2.0, 1.0, 0.0};
  const auto f = make_grid_sampled(grid, shape);
  const auto n = renormalize(f, grid);
  CHECK(validate_distribution(n, grid).norm_value == doctest::Approx(1.0).epsilon(1e-14));
  const auto& values = std::get<GridSampled>(n.variant()).values;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    CHECK(values[i] == doctest::Approx(shape[i] * values[2] / 2.0));
  }
  const auto again = renormalize(n, grid);
  const auto& values2 = std::get<GridSampled>(again.variant()).values;
  for (std::size_t i = 0; i < shape.size(); ++i) CHECK(std::abs(values2[i] - values[i]) <= 1e-12);

  CHECK_ERROR_KIND(renormalize(make_grid_sampled(grid, std::vector<double>(5, 0.0)), grid),
                   ErrorKind::DegenerateDistribution);

  const PhysicalConfig c{1.0, 1};
  const auto m = make_mixture({{Vec{-1.0}, 1.0, 1.0}, {Vec{1.0}, 0.7, 1.0}}, c);
  const auto big = QuadratureGrid::cube(1, {-10.0, 10.0}, 2001);
  const auto mn = renormalize(m, big);
  CHECK(validate_distribution(mn, big).ok);
}

TEST_CASE("default grid keeps random mixtures normalized") {
  std::mt19937_64 rng(7);
  for (std::size_t d = 1; d <= 3; ++d) {
    const PhysicalConfig c{1.0, static_cast<int>(d)};
    for (int k = 0; k < (d == 3 ? 3 : 10); ++k) {
      const auto f = random_mixture(rng, c);
      const auto g = make_gaussian(random_point(rng, d, 2.0), 0.5 + 0.1 * k, c);
      const auto grid = default_mode_grid(f, g, c);
      CHECK(validate_distribution(f, grid).ok);
      CHECK(validate_distribution(g, grid).ok);
    }
  }
}

TEST_CASE("grid-sampled interpolation and translation") {
  const auto grid = line(2.0, 5);
  const auto f = make_grid_sampled(grid, {0.0, 1.0, 3.0, 1.0, 0.0});
  CHECK(f(Vec{0.5}) == doctest::Approx(2.0));
  CHECK(f(Vec{2.5}) == 0.0);
  const auto t = f.translated(Vec{1.0});
  CHECK(t(Vec{1.0}) == doctest::Approx(3.0));
  CHECK(t.support().contains(Vec{2.9}));
}

TEST_CASE("state construction") {
  const PhysicalConfig c{1.0, 1};
  const auto f = make_gaussian(Vec(1), 1.0, c);
  const auto f2 = make_gaussian(Vec(2), 1.0, PhysicalConfig{1.0, 2});
  CHECK_ERROR_KIND(TwoParticleState(f, f2, Statistics::Boson, c), ErrorKind::InvalidParameter);
  const TwoParticleState s(f, f, Statistics::Boson, c);
  CHECK(s.with_statistics(Statistics::Fermion).statistics() == Statistics::Fermion);
}
