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

#include "twomode/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twomode {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Vec random_direction(std::mt19937_64& rng, std::size_t dim) {
  for (;;) {
    Vec v = random_point(rng, dim, 1.0);
    const double n = v.norm();
    if (n > 1e-3 && n <= 1.0) return v * (1.0 / n);
  }
}

}  // namespace

Vec random_point(std::mt19937_64& rng, std::size_t dimension, double extent) {
  Vec v(dimension);
  for (std::size_t i = 0; i < dimension; ++i) v[i] = uniform(rng, -extent, extent);
  return v;
}

ModeDistribution random_mixture(std::mt19937_64& rng, const PhysicalConfig& config,
                                const MixtureFamily& family) {
  const auto dim = static_cast<std::size_t>(config.dimension);
  const auto count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(family.max_components));
  std::vector<GaussianComponent> comps;
  for (int k = 0; k < count; ++k) {
    comps.push_back({random_point(rng, dim, family.center_range),
                     uniform(rng, family.min_width, family.max_width), uniform(rng, 0.2, 1.0)});
  }
  const auto raw = make_mixture(std::move(comps), config);
  return renormalize(raw, default_mode_grid(raw, raw, config));
}

TwoParticleState random_state(std::mt19937_64& rng, Statistics statistics,
                              const PhysicalConfig& config, double near_fraction,
                              const MixtureFamily& family) {
  auto f = random_mixture(rng, config, family);
  const bool near = uniform(rng, 0.0, 1.0) < near_fraction;
  if (near) {
    const auto dim = static_cast<std::size_t>(config.dimension);
    const Vec shift = random_direction(rng, dim) * uniform(rng, 0.02, 1.0);
    auto g = f.translated(shift);
    return TwoParticleState(std::move(f), std::move(g), statistics, config);
  }
  auto g = random_mixture(rng, config, family);
  return TwoParticleState(std::move(f), std::move(g), statistics, config);
}

TwoParticleState disjoint_state(std::mt19937_64& rng, Statistics statistics,
                                const PhysicalConfig& config) {
  config.validate();
  const auto dim = static_cast<std::size_t>(config.dimension);
  const std::size_t nodes = dim == 1 ? 401 : (dim == 2 ? 121 : 49);
  const auto grid = QuadratureGrid::cube(dim, {-16.0, 16.0}, nodes);

  // Gaussian bumps on either side of the p_0 = 0 plane, cut to zero on the
  // far side so that no node carries both.
  const auto bump = [&](double side) {
    const double q = uniform(rng, 0.7, 1.2);
    Vec centre = random_point(rng, dim, 1.0);
    centre[0] = side * (kSupportWidths * q + 0.5);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Vec p = grid.node(i);
      const bool inside = side < 0 ? p[0] < 0.0 : p[0] > 0.0;
      values[i] = inside ? std::exp(-(p - centre).norm2() / (q * q)) : 0.0;
    }
    return renormalize(make_grid_sampled(grid, std::move(values)), grid);
  };
  auto f = bump(-1.0);
  auto g = bump(+1.0);
  return TwoParticleState(std::move(f), std::move(g), statistics, config);
}

}  // namespace twomode
