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

#include <optional>

#include "twomode/grid.hpp"
#include "twomode/numerics.hpp"
#include "twomode/state.hpp"

namespace twomode {

/// Fermion states with beta_fg above 1 - kIndeterminateEpsilon are refused:
/// the detection probability there is 0/0 with a direction-dependent limit.
inline constexpr double kIndeterminateEpsilon = 1e-9;

/// Every term of the one-particle detection probability at one point.
/// Probabilities are densities (per unit position volume).
struct DetectionBreakdown {
  double beta_fg = 0.0;
  double inner_product = 0.0;  // <I|I>
  double alpha_fg = 0.0;       // signed, beta / <I|I>
  double alpha_ff = 0.0;
  double alpha_gg = 0.0;
  double p_ff = 0.0;
  double p_gg = 0.0;
  double re_p_fg = 0.0;
  double p = 0.0;   // 2 alpha_fg Re P_fg +- alpha_gg P_ff +- alpha_ff P_gg
  double p0 = 0.0;  // |alpha_gg| P_ff + |alpha_ff| P_gg
  bool truncation_warning = false;
};

/// State prepared on a mode grid: samples, overlap and norm are computed
/// once, then any number of detector positions can be evaluated.
class DetectionModel {
 public:
  DetectionModel(const TwoParticleState& state, const QuadratureGrid& mode_grid,
                 Evaluation mode = Evaluation::Auto);

  const TwoParticleState& state() const noexcept { return state_; }
  double beta() const noexcept { return beta_; }
  double inner_product() const noexcept { return inner_; }
  /// 1 - 2 beta / (N_f + N_g) with the grid norms N.
  double distinguishability() const noexcept;
  bool indeterminate() const noexcept;

  ComplexAmplitude amplitude_f(const Vec& r) const;
  ComplexAmplitude amplitude_g(const Vec& r) const;

  /// Throws IndeterminateState for fermions with f ~ g.
  DetectionBreakdown breakdown(const Vec& r) const;
  /// One-particle densities |Psi_f|^2, |Psi_g|^2 (never indeterminate).
  double density_f(const Vec& r) const;
  double density_g(const Vec& r) const;

  bool truncation_warning(const Vec& r) const;

 private:
  ComplexAmplitude amplitude(const std::optional<ModeSamples>& samples,
                             const ModeDistribution& d, const Vec& r) const;

  TwoParticleState state_;
  QuadratureGrid grid_;
  Evaluation mode_;
  std::optional<ModeSamples> f_samples_;
  std::optional<ModeSamples> g_samples_;
  double beta_ = 0.0;
  double inner_ = 0.0;
  double norm_f_ = 1.0;
  double norm_g_ = 1.0;
  bool overlap_warning_ = false;
};

/// +-1 + beta_fg^2.
double inner_product(const TwoParticleState& state, const QuadratureGrid& grid,
                     Evaluation mode = Evaluation::Auto);

DetectionBreakdown detection_breakdown(const TwoParticleState& state, const Vec& r,
                                       const QuadratureGrid& grid,
                                       Evaluation mode = Evaluation::Auto);

/// Integral of P over a position grid; 2 for both statistics. Flags
/// truncation when either one-particle density loses more than 1e-6 of its
/// mass outside the grid.
Estimate<double> spatial_total(const TwoParticleState& state,
                               const QuadratureGrid& position_grid,
                               const QuadratureGrid& mode_grid,
                               Evaluation mode = Evaluation::Auto);

}  // namespace twomode
