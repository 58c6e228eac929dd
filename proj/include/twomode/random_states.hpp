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

#pragma once

#include <cstdint>
#include <random>

#include "twomode/distribution.hpp"
#include "twomode/state.hpp"

namespace twomode {

struct MixtureFamily {
  int max_components = 3;
  double center_range = 3.0;
  double min_width = 0.5;
  double max_width = 1.5;
};

/// Random normalized Gaussian mixture (renormalized on its default grid).
ModeDistribution random_mixture(std::mt19937_64& rng, const PhysicalConfig& config,
                                const MixtureFamily& family = {});

/// Random point in [-extent, extent]^d.
Vec random_point(std::mt19937_64& rng, std::size_t dimension, double extent);

/// Random pair: independent mixtures, or (with probability `near_fraction`)
/// g a small translate of f so that overlaps near one are covered.
TwoParticleState random_state(std::mt19937_64& rng, Statistics statistics,
                              const PhysicalConfig& config, double near_fraction = 0.3,
                              const MixtureFamily& family = {});

/// Two grid-sampled bumps on a shared grid with disjoint supports, so the
/// overlap is exactly zero.
TwoParticleState disjoint_state(std::mt19937_64& rng, Statistics statistics,
                                const PhysicalConfig& config);

}  // namespace twomode
