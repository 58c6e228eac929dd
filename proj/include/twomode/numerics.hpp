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

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "twomode/config.hpp"
#include "twomode/distribution.hpp"
#include "twomode/grid.hpp"
#include "twomode/vec.hpp"

namespace twomode {

using ComplexAmplitude = std::complex<double>;

/// Auto takes closed forms where they exist; Quadrature always integrates.
enum class Evaluation { Auto, Quadrature };

template <class T>
struct Estimate {
  T value{};
  bool truncation_warning = false;
};

/// Nodes per oscillation period required along each axis.
inline constexpr double kNodesPerPeriod = 8.0;

/// True when every axis spacing resolves e^{ip.r/hbar} with at least
/// kNodesPerPeriod nodes per period.
bool resolves_oscillation(const QuadratureGrid& grid, const Vec& r, double hbar);

/// A distribution sampled on a quadrature grid, ready for repeated
/// overlaps and Fourier sums.
class ModeSamples {
 public:
  ModeSamples(const ModeDistribution& f, const QuadratureGrid& grid);

  const QuadratureGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  /// Whether the grid holds the distribution's effective support.
  bool covers_support() const noexcept { return covers_; }

  double norm() const;
  double overlap(const ModeSamples& other) const;
  /// (2 pi hbar)^{-d/2} sum_nodes w f(p) e^{i p.r / hbar}
  ComplexAmplitude amplitude(const Vec& r, double hbar) const;

 private:
  QuadratureGrid grid_;
  std::vector<double> values_;
  std::vector<double> weights_;
  std::vector<double> weighted_;  // weights * values
  bool covers_;
};

/// beta_fg = integral of f g.
Estimate<double> overlap_integral(const ModeDistribution& f, const ModeDistribution& g,
                                  const QuadratureGrid& grid,
                                  Evaluation mode = Evaluation::Auto);

/// One-particle position amplitude Psi_f(r) in the plane-wave basis.
Estimate<ComplexAmplitude> position_amplitude(const ModeDistribution& f, const Vec& r,
                                              const QuadratureGrid& grid,
                                              const PhysicalConfig& config,
                                              Evaluation mode = Evaluation::Auto);

/// Closed-form Psi_f(r) of an isotropic Gaussian.
ComplexAmplitude gaussian_position_amplitude(const IsotropicGaussian& f, const Vec& r,
                                             double hbar);
/// Exact amplitude of a Gaussian or a Gaussian mixture; empty for grid data.
std::optional<ComplexAmplitude> closed_position_amplitude(const ModeDistribution& f,
                                                          const Vec& r, double hbar);
/// Whether closed_position_amplitude has a value for f.
bool has_closed_amplitude(const ModeDistribution& f);

inline constexpr std::size_t kDefaultPairBudget = std::size_t{1} << 24;

/// Direct double quadrature of P_fg(r) over all node pairs, with no
/// factorization and no SIMD kernels. Test oracle only.
ComplexAmplitude double_overlap_bruteforce(const ModeDistribution& f,
                                           const ModeDistribution& g, const Vec& r,
                                           const QuadratureGrid& grid,
                                           const PhysicalConfig& config,
                                           std::size_t max_pairs = kDefaultPairBudget);

}  // namespace twomode
