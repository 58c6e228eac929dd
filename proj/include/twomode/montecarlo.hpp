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
#include <variant>
#include <vector>

#include "twomode/grid.hpp"
#include "twomode/interference.hpp"
#include "twomode/state.hpp"

namespace twomode {

struct DetectorBin {
  Vec center;
  Vec half_width;

  void validate() const;
  double volume() const;
  bool contains(const Vec& r) const;
  Box box() const;
};

struct RunResult {
  std::uint64_t n_events = 0;
  std::uint64_t in_bin_count = 0;
  /// count / n * mass / bin volume
  double density_estimate = 0.0;
  /// Binomial error on the bin proportion, in the same units.
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

/// Both particles emitted: density P(r) / 2, mass 2.
struct TwoParticleSource {
  TwoParticleState state;
};
/// One source only: density |Psi_f(r)|^2, mass 1.
struct OneParticleSource {
  ModeDistribution f;
  PhysicalConfig config;
};
using DensitySource = std::variant<TwoParticleSource, OneParticleSource>;

/// Piecewise-constant density on the cells of a position grid, sampled by
/// inverse transform over cells and uniform jitter inside a cell.
class PositionSampler {
 public:
  PositionSampler(const DensitySource& source, const QuadratureGrid& position_grid,
                  const QuadratureGrid& mode_grid);

  /// Total particle number the density represents (2 or 1).
  double mass() const noexcept { return mass_; }
  const QuadratureGrid& grid() const noexcept { return grid_; }

  std::vector<Vec> sample(std::size_t n, std::uint64_t seed) const;
  /// Same event stream as sample(n, seed), counted against a bin.
  RunResult count(const DetectorBin& bin, std::size_t n, std::uint64_t seed) const;

 private:
  template <class Visit>
  void draw(std::size_t n, std::uint64_t seed, Visit&& visit) const;

  QuadratureGrid grid_;
  std::vector<double> cumulative_;
  double mass_;
};

std::vector<Vec> sample_positions(const DensitySource& source,
                                  const QuadratureGrid& position_grid,
                                  const QuadratureGrid& mode_grid, std::size_t n,
                                  std::uint64_t seed);

/// Seed of run `index` derived from a master seed.
std::uint64_t run_seed(std::uint64_t master, unsigned index);

/// Largest relative change of the density across a bin before the estimate
/// is refused.
inline constexpr double kMaxBinVariation = 0.05;

struct ContrastEstimate {
  double contrast = 0.0;
  double standard_error = 0.0;
  RunResult pair_run;
  RunResult f_run;
  RunResult g_run;
};

/// Three simulated experiments (both sources, f alone, g alone) combined
/// with the prepared |alpha| coefficients into C-hat.
ContrastEstimate estimate_contrast(const TwoParticleState& state, const DetectorBin& bin,
                                   std::size_t n_per_run, std::uint64_t seed,
                                   const QuadratureGrid& position_grid,
                                   const QuadratureGrid& mode_grid);

}  // namespace twomode
