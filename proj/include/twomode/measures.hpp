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

#include "twomode/interference.hpp"

namespace twomode {

/// P0 at or below this density is a singular point of the contrast.
inline constexpr double kSingularEpsilon = 1e-30;

/// D = 1 - 2 int(fg) / (int f^2 + int g^2); equals 1 - beta_fg when both
/// distributions are normalized.
double distinguishability(const ModeDistribution& f, const ModeDistribution& g,
                          const QuadratureGrid& grid,
                          Evaluation mode = Evaluation::Auto);

/// C~ = 2 beta Re P_fg / (P_ff + P_gg). Exposed for the |C~| <= 1 property;
/// |C~| is not a usable contrast measure because it loses the sign of the
/// interference term.
double contrast_tilde(const DetectionBreakdown& b);

/// C = P / P0 = 1 +- C~. Throws SingularPoint when P0 <= kSingularEpsilon.
double contrast(const DetectionBreakdown& b, Statistics statistics);
double contrast(const TwoParticleState& state, const Vec& r, const QuadratureGrid& grid,
                Evaluation mode = Evaluation::Auto);

enum class BoundKind { BosonUpper, FermionLower };

struct ComplementarityReport {
  double d = 0.0;
  double c = 0.0;
  double c_tilde = 0.0;
  double beta_fg = 0.0;
  Statistics statistics = Statistics::Boson;
  BoundKind bound_kind = BoundKind::BosonUpper;
  double bound_value = 0.0;
  /// Non-negative when the bound holds.
  double slack = 0.0;
  bool satisfied = false;
};

ComplementarityReport complementarity_from(const DetectionBreakdown& b,
                                           Statistics statistics, double d,
                                           double tol);
ComplementarityReport complementarity_report(const TwoParticleState& state, const Vec& r,
                                             const QuadratureGrid& grid, double tol,
                                             Evaluation mode = Evaluation::Auto);

}  // namespace twomode
