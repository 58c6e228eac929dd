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

#include "twomode/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

std::size_t node_floor(std::size_t dim) { return dim == 3 ? 32 : 64; }
std::size_t node_cap(std::size_t dim) {
  switch (dim) {
    case 1: return std::size_t{1} << 14;
    case 2: return 1024;
    default: return 160;
  }
}

std::size_t choose_nodes(std::size_t dim, double width, double spacing) {
  const double wanted = std::ceil(width / spacing) + 1.0;
  const auto n = static_cast<std::size_t>(std::min(wanted, 1e9));
  return std::clamp(n, node_floor(dim), node_cap(dim));
}

}  // namespace

TwoParticleState::TwoParticleState(ModeDistribution f, ModeDistribution g,
                                   Statistics statistics, PhysicalConfig config)
    : f_(std::move(f)), g_(std::move(g)), statistics_(statistics), config_(config) {
  config_.validate();
  const auto d = static_cast<std::size_t>(config_.dimension);
  if (f_.dimension() != d || g_.dimension() != d) {
    throw Error(ErrorKind::InvalidParameter,
                "distributions must have dimension " + std::to_string(d));
  }
}

TwoParticleState TwoParticleState::with_g(ModeDistribution g) const {
  return TwoParticleState(f_, std::move(g), statistics_, config_);
}

TwoParticleState TwoParticleState::with_statistics(Statistics s) const {
  return TwoParticleState(f_, g_, s, config_);
}

QuadratureGrid default_mode_grid(const ModeDistribution& f, const ModeDistribution& g,
                                 const PhysicalConfig& config, double max_abs_position,
                                 std::size_t nodes_per_axis) {
  config.validate();
  const Box box = f.support().unite(g.support());
  const std::size_t dim = box.lower.size();
  std::vector<AxisRange> axes;
  double widest = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    axes.push_back({box.lower[i], box.upper[i]});
    widest = std::max(widest, box.upper[i] - box.lower[i]);
  }
  if (nodes_per_axis == 0) {
    double h = std::min(f.min_width(), g.min_width()) / 4.0;
    if (max_abs_position > 0.0) {
      h = std::min(h, 2.0 * std::numbers::pi * config.hbar / (8.0 * max_abs_position));
    }
    nodes_per_axis = choose_nodes(dim, widest, h);
  }
  return QuadratureGrid(std::move(axes), nodes_per_axis);
}

QuadratureGrid default_mode_grid(const TwoParticleState& state, double max_abs_position,
                                 std::size_t nodes_per_axis) {
  return default_mode_grid(state.f(), state.g(), state.config(), max_abs_position,
                           nodes_per_axis);
}

QuadratureGrid default_position_grid(const TwoParticleState& state,
                                     std::size_t nodes_per_axis) {
  const double hbar = state.config().hbar;
  const double q_min = std::min(state.f().min_width(), state.g().min_width());
  const double q_max = std::max(state.f().max_width(), state.g().max_width());
  const double half = 8.0 * hbar / q_min;
  const auto dim = static_cast<std::size_t>(state.config().dimension);
  if (nodes_per_axis == 0) {
    const Box box = state.f().support().unite(state.g().support());
    double spread = 0.0;
    for (std::size_t i = 0; i < dim; ++i) spread = std::max(spread, box.upper[i] - box.lower[i]);
    const double h = std::min(hbar / (4.0 * q_max),
                              2.0 * std::numbers::pi * hbar / (8.0 * spread));
    nodes_per_axis = choose_nodes(dim, 2.0 * half, h);
  }
  return QuadratureGrid::cube(dim, {-half, half}, nodes_per_axis);
}

}  // namespace twomode
