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

#include "twomode/config.hpp"
#include "twomode/state.hpp"
#include "twomode/vec.hpp"

namespace twomode {

/// Two isotropic Gaussians of equal width Q.
struct GaussianPair {
  Vec f_center;
  Vec g_center;
  double width = 1.0;
  PhysicalConfig config;
  Statistics statistics = Statistics::Boson;

  void validate() const;
  Vec separation() const { return f_center - g_center; }
};

/// The pair behind a state, when both modes are equal-width Gaussians.
std::optional<GaussianPair> gaussian_pair(const TwoParticleState& state);

/// exp(-|f_o - g_o|^2 / 2Q^2)
double closed_beta(const GaussianPair& pair);
/// +-1 + exp(-|f_o - g_o|^2 / Q^2)
double closed_inner(const GaussianPair& pair);
/// 1 - closed_beta
double closed_distinguishability(const GaussianPair& pair);

/// K(d) = 2 (Q^2 / (2 pi hbar^2))^{d/2}, fixed by the integral of P being 2.
double detection_prefactor(double width, const PhysicalConfig& config);
/// Q^3 / (sqrt(8) hbar^3), a 3D prefactor that does not normalize P. It is
/// off from K(3) by pi^{3/2} / 2; kept for comparison only.
double unnormalized_detection_prefactor(double width, double hbar);

/// (+-1 + beta cos((f_o - g_o).r / hbar)) / (+-1 + beta^2)
double detection_ratio(const GaussianPair& pair, const Vec& r);
/// K(d) exp(-Q^2 r^2 / 2 hbar^2) * detection_ratio. Throws IndeterminateState
/// for fermion pairs with beta above 1 - kIndeterminateEpsilon.
double closed_detection(const GaussianPair& pair, const Vec& r);

/// F(W) = P_N / P_D with P_N = -1 + e^{-W^2/2Q^2} cos(W.r/hbar) and
/// P_D = -1 + e^{-W^2/Q^2}: the fermion detection ratio as a function of the
/// centre separation W. Throws IndeterminateState at W = 0.
double fermion_ratio(const Vec& separation, const Vec& r, double width, double hbar);

/// Limit of F(t u) as t -> 0 along the unit direction u:
/// (1/2)(1 + (u.r)^2 Q^2 / hbar^2). Different directions give different
/// limits whenever u.r differs, so F has no limit at W = 0.
double lhopital_limit(const Vec& direction, const Vec& r, double width, double hbar);

struct DirectionalLimit {
  Vec direction;
  Vec r;
  double limit_value = 0.0;
};

DirectionalLimit directional_limit(const Vec& direction, const Vec& r, double width,
                                   double hbar);

}  // namespace twomode
