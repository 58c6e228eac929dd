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

#include "twomode/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "twomode/errors.hpp"
#include "twomode/interference.hpp"

namespace twomode {

void GaussianPair::validate() const {
  config.validate();
  if (!(width > 0.0)) throw Error(ErrorKind::InvalidParameter, "width Q must be positive");
  const auto d = static_cast<std::size_t>(config.dimension);
  if (f_center.size() != d || g_center.size() != d) {
    throw Error(ErrorKind::InvalidParameter, "centres must have the configured dimension");
  }
}

std::optional<GaussianPair> gaussian_pair(const TwoParticleState& state) {
  const auto* a = state.f().as_gaussian();
  const auto* b = state.g().as_gaussian();
  if (a == nullptr || b == nullptr || a->width != b->width) return std::nullopt;
  return GaussianPair{a->center, b->center, a->width, state.config(), state.statistics()};
}

double closed_beta(const GaussianPair& pair) {
  pair.validate();
  return std::exp(-pair.separation().norm2() / (2.0 * pair.width * pair.width));
}

double closed_inner(const GaussianPair& pair) {
  pair.validate();
  return sign(pair.statistics) +
         std::exp(-pair.separation().norm2() / (pair.width * pair.width));
}

double closed_distinguishability(const GaussianPair& pair) { return 1.0 - closed_beta(pair); }

double detection_prefactor(double width, const PhysicalConfig& config) {
  config.validate();
  const double q2 = width * width;
  return 2.0 * std::pow(q2 / (2.0 * std::numbers::pi * config.hbar * config.hbar),
                        0.5 * config.dimension);
}

double unnormalized_detection_prefactor(double width, double hbar) {
  return std::pow(width / hbar, 3) / std::sqrt(8.0);
}

double detection_ratio(const GaussianPair& pair, const Vec& r) {
  pair.validate();
  const double s = sign(pair.statistics);
  const double beta = closed_beta(pair);
  if (pair.statistics == Statistics::Fermion && beta > 1.0 - kIndeterminateEpsilon) {
    throw Error(ErrorKind::IndeterminateState, "fermion pair with coincident centres");
  }
  const double phase = pair.separation().dot(r) / pair.config.hbar;
  return (s + beta * std::cos(phase)) / (s + beta * beta);
}

double closed_detection(const GaussianPair& pair, const Vec& r) {
  const double ratio = detection_ratio(pair, r);
  const double q2 = pair.width * pair.width;
  const double hbar = pair.config.hbar;
  return detection_prefactor(pair.width, pair.config) *
         std::exp(-q2 * r.norm2() / (2.0 * hbar * hbar)) * ratio;
}

double fermion_ratio(const Vec& separation, const Vec& r, double width, double hbar) {
  const double w2 = separation.norm2();
  if (w2 == 0.0) {
    throw Error(ErrorKind::IndeterminateState, "F(W) is 0/0 at W = 0");
  }
  const double q2 = width * width;
  const double phase = separation.dot(r) / hbar;
  const double half_sin = std::sin(0.5 * phase);
  // -1 + e^{-a} cos(b) = expm1(-a) cos(b) - 2 sin^2(b/2), free of cancellation.
  const double numerator = std::expm1(-w2 / (2.0 * q2)) * std::cos(phase) - 2.0 * half_sin * half_sin;
  const double denominator = std::expm1(-w2 / q2);
  return numerator / denominator;
}

double lhopital_limit(const Vec& direction, const Vec& r, double width, double hbar) {
  if (std::abs(direction.norm() - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidParameter, "direction must be a unit vector");
  }
  const double along = direction.dot(r);
  return 0.5 * (1.0 + along * along * width * width / (hbar * hbar));
}

DirectionalLimit directional_limit(const Vec& direction, const Vec& r, double width, double hbar) {
  return {direction, r, lhopital_limit(direction, r, width, hbar)};
}

}  // namespace twomode
