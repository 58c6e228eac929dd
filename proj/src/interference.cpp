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

#include "twomode/interference.hpp"

#include <cmath>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

bool closed_form_available(const TwoParticleState& state, Evaluation mode) {
  const auto* a = state.f().as_gaussian();
  const auto* b = state.g().as_gaussian();
  return mode == Evaluation::Auto && a != nullptr && b != nullptr && a->width == b->width;
}

}  // namespace

DetectionModel::DetectionModel(const TwoParticleState& state, const QuadratureGrid& mode_grid,
                               Evaluation mode)
    : state_(state), grid_(mode_grid), mode_(mode) {
  if (grid_.dimension() != static_cast<std::size_t>(state_.config().dimension)) {
    throw Error(ErrorKind::InvalidParameter, "mode grid dimension does not match state");
  }
  if (closed_form_available(state_, mode_)) {
    beta_ = overlap_integral(state_.f(), state_.g(), grid_, mode_).value;
  } else {
    f_samples_.emplace(state_.f(), grid_);
    g_samples_.emplace(state_.g(), grid_);
    beta_ = f_samples_->overlap(*g_samples_);
    norm_f_ = f_samples_->norm();
    norm_g_ = g_samples_->norm();
    overlap_warning_ = !grid_.bounds().contains(state_.f().support().intersect(state_.g().support()));
  }
  // Samples are only kept for amplitudes that have no exact expression.
  const bool closed_f = mode_ == Evaluation::Auto && has_closed_amplitude(state_.f());
  const bool closed_g = mode_ == Evaluation::Auto && has_closed_amplitude(state_.g());
  if (closed_f) f_samples_.reset();
  else if (!f_samples_) f_samples_.emplace(state_.f(), grid_);
  if (closed_g) g_samples_.reset();
  else if (!g_samples_) g_samples_.emplace(state_.g(), grid_);

  inner_ = sign(state_.statistics()) + beta_ * beta_;
}

bool DetectionModel::indeterminate() const noexcept {
  return state_.statistics() == Statistics::Fermion && beta_ > 1.0 - kIndeterminateEpsilon;
}

double DetectionModel::distinguishability() const noexcept {
  return 1.0 - 2.0 * beta_ / (norm_f_ + norm_g_);
}

ComplexAmplitude DetectionModel::amplitude(const std::optional<ModeSamples>& samples,
                                           const ModeDistribution& d, const Vec& r) const {
  if (r.size() != d.dimension()) {
    throw Error(ErrorKind::InvalidParameter, "position dimension does not match state");
  }
  if (samples) return samples->amplitude(r, state_.config().hbar);
  return *closed_position_amplitude(d, r, state_.config().hbar);
}

ComplexAmplitude DetectionModel::amplitude_f(const Vec& r) const {
  return amplitude(f_samples_, state_.f(), r);
}

ComplexAmplitude DetectionModel::amplitude_g(const Vec& r) const {
  return amplitude(g_samples_, state_.g(), r);
}

double DetectionModel::density_f(const Vec& r) const { return std::norm(amplitude_f(r)); }
double DetectionModel::density_g(const Vec& r) const { return std::norm(amplitude_g(r)); }

bool DetectionModel::truncation_warning(const Vec& r) const {
  if (overlap_warning_) return true;
  for (const auto* s : {&f_samples_, &g_samples_}) {
    if (*s && (!(*s)->covers_support() || !resolves_oscillation(grid_, r, state_.config().hbar))) {
      return true;
    }
  }
  return false;
}

DetectionBreakdown DetectionModel::breakdown(const Vec& r) const {
  if (indeterminate()) {
    throw Error(ErrorKind::IndeterminateState,
                "fermions with f = g: numerator and denominator of the detection "
                "probability both vanish (beta = " + std::to_string(beta_) + ")");
  }
  const ComplexAmplitude psi_f = amplitude_f(r);
  const ComplexAmplitude psi_g = amplitude_g(r);
  const double s = sign(state_.statistics());

  DetectionBreakdown b;
  b.beta_fg = beta_;
  b.inner_product = inner_;
  b.alpha_fg = beta_ / inner_;
  b.alpha_ff = 1.0 / inner_;
  b.alpha_gg = 1.0 / inner_;
  b.p_ff = std::norm(psi_f);
  b.p_gg = std::norm(psi_g);
  b.re_p_fg = (std::conj(psi_f) * psi_g).real();
  b.p = 2.0 * b.alpha_fg * b.re_p_fg + s * b.alpha_gg * b.p_ff + s * b.alpha_ff * b.p_gg;
  b.p0 = std::abs(b.alpha_gg) * b.p_ff + std::abs(b.alpha_ff) * b.p_gg;
  b.truncation_warning = truncation_warning(r);
  return b;
}

double inner_product(const TwoParticleState& state, const QuadratureGrid& grid, Evaluation mode) {
  const double beta = overlap_integral(state.f(), state.g(), grid, mode).value;
  return sign(state.statistics()) + beta * beta;
}

DetectionBreakdown detection_breakdown(const TwoParticleState& state, const Vec& r,
                                       const QuadratureGrid& grid, Evaluation mode) {
  return DetectionModel(state, grid, mode).breakdown(r);
}

Estimate<double> spatial_total(const TwoParticleState& state, const QuadratureGrid& position_grid,
                               const QuadratureGrid& mode_grid, Evaluation mode) {
  const DetectionModel model(state, mode_grid, mode);
  const auto w = position_grid.weights();
  double total = 0.0;
  double mass_f = 0.0;
  double mass_g = 0.0;
  bool warn = false;
  for (std::size_t i = 0; i < position_grid.size(); ++i) {
    const auto b = model.breakdown(position_grid.node(i));
    total += w[i] * b.p;
    mass_f += w[i] * b.p_ff;
    mass_g += w[i] * b.p_gg;
    warn = warn || b.truncation_warning;
  }
  constexpr double kMassTolerance = 1e-6;
  warn = warn || std::abs(1.0 - mass_f) > kMassTolerance || std::abs(1.0 - mass_g) > kMassTolerance;
  return {total, warn};
}

}  // namespace twomode
