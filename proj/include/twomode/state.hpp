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

#include "twomode/config.hpp"
#include "twomode/distribution.hpp"
#include "twomode/grid.hpp"

namespace twomode {

/// Two particles from independent sources in modes f and g.
class TwoParticleState {
 public:
  TwoParticleState(ModeDistribution f, ModeDistribution g, Statistics statistics,
                   PhysicalConfig config);

  const ModeDistribution& f() const noexcept { return f_; }
  const ModeDistribution& g() const noexcept { return g_; }
  Statistics statistics() const noexcept { return statistics_; }
  const PhysicalConfig& config() const noexcept { return config_; }

  TwoParticleState with_g(ModeDistribution g) const;
  TwoParticleState with_statistics(Statistics s) const;

 private:
  ModeDistribution f_;
  ModeDistribution g_;
  Statistics statistics_;
  PhysicalConfig config_;
};

/// Momentum grid covering both supports. When `nodes_per_axis` is zero the
/// count is chosen so the spacing resolves the narrowest width and the
/// oscillation e^{ip.r/hbar} for |r| up to `max_abs_position`.
QuadratureGrid default_mode_grid(const ModeDistribution& f, const ModeDistribution& g,
                                 const PhysicalConfig& config,
                                 double max_abs_position = 0.0,
                                 std::size_t nodes_per_axis = 0);
QuadratureGrid default_mode_grid(const TwoParticleState& state,
                                 double max_abs_position = 0.0,
                                 std::size_t nodes_per_axis = 0);

/// Symmetric position grid holding the one-particle densities of both modes.
QuadratureGrid default_position_grid(const TwoParticleState& state,
                                     std::size_t nodes_per_axis = 0);

}  // namespace twomode
