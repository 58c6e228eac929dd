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

#include "twomode/measures.hpp"

#include <cmath>

#include "twomode/errors.hpp"

namespace twomode {

double distinguishability(const ModeDistribution& f, const ModeDistribution& g,
                          const QuadratureGrid& grid, Evaluation mode) {
  const auto* a = f.as_gaussian();
  const auto* b = g.as_gaussian();
  if (mode == Evaluation::Auto && a != nullptr && b != nullptr && a->width == b->width) {
    return 1.0 - overlap_integral(f, g, grid, mode).value;
  }
  const ModeSamples fs(f, grid);
  const ModeSamples gs(g, grid);
  return 1.0 - 2.0 * fs.overlap(gs) / (fs.norm() + gs.norm());
}

double contrast_tilde(const DetectionBreakdown& b) {
  const double baseline = b.p_ff + b.p_gg;
  if (!(baseline > kSingularEpsilon)) {
    throw Error(ErrorKind::SingularPoint, "P_ff + P_gg vanishes at this point");
  }
  return 2.0 * b.beta_fg * b.re_p_fg / baseline;
}

double contrast(const DetectionBreakdown& b, Statistics statistics) {
  if (!(b.p0 > kSingularEpsilon)) {
    throw Error(ErrorKind::SingularPoint, "P0 = " + std::to_string(b.p0) +
                                              " is below the singular threshold");
  }
  return 1.0 + sign(statistics) * contrast_tilde(b);
}

double contrast(const TwoParticleState& state, const Vec& r, const QuadratureGrid& grid,
                Evaluation mode) {
  return contrast(detection_breakdown(state, r, grid, mode), state.statistics());
}

ComplementarityReport complementarity_from(const DetectionBreakdown& b, Statistics statistics,
                                           double d, double tol) {
  ComplementarityReport rep;
  rep.d = d;
  rep.c = contrast(b, statistics);
  rep.c_tilde = contrast_tilde(b);
  rep.beta_fg = b.beta_fg;
  rep.statistics = statistics;
  if (statistics == Statistics::Boson) {
    rep.bound_kind = BoundKind::BosonUpper;
    rep.bound_value = 2.0;
    rep.slack = rep.bound_value - (rep.d + rep.c);
  } else {
    rep.bound_kind = BoundKind::FermionLower;
    rep.bound_value = 2.0 * (1.0 - b.beta_fg);
    rep.slack = (rep.d + rep.c) - rep.bound_value;
  }
  rep.satisfied = rep.slack >= -tol;
  return rep;
}

ComplementarityReport complementarity_report(const TwoParticleState& state, const Vec& r,
                                             const QuadratureGrid& grid, double tol,
                                             Evaluation mode) {
  const DetectionModel model(state, grid, mode);
  return complementarity_from(model.breakdown(r), state.statistics(), model.distinguishability(),
                              tol);
}

}  // namespace twomode
