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

#include "twomode/numerics.hpp"

#include <cmath>
#include <numbers>

#include "twomode/errors.hpp"
#include "twomode/kernels.hpp"

namespace twomode {

namespace {

double plane_wave_norm(double hbar, std::size_t dim) {
  return std::pow(2.0 * std::numbers::pi * hbar, -0.5 * static_cast<double>(dim));
}

bool equal_width_gaussians(const ModeDistribution& f, const ModeDistribution& g) {
  const auto* a = f.as_gaussian();
  const auto* b = g.as_gaussian();
  return a != nullptr && b != nullptr && a->width == b->width;
}

}  // namespace

bool resolves_oscillation(const QuadratureGrid& grid, const Vec& r, double hbar) {
  for (std::size_t ax = 0; ax < grid.dimension(); ++ax) {
    if (r[ax] == 0.0) continue;
    const double period = 2.0 * std::numbers::pi * hbar / std::abs(r[ax]);
    if (grid.spacing(ax) * kNodesPerPeriod > period) return false;
  }
  return true;
}

ModeSamples::ModeSamples(const ModeDistribution& f, const QuadratureGrid& grid)
    : grid_(grid), values_(f.sample(grid)), weights_(grid.weights()), weighted_(weights_),
      covers_(grid.bounds().contains(f.support())) {
  for (std::size_t i = 0; i < weighted_.size(); ++i) weighted_[i] *= values_[i];
}

double ModeSamples::norm() const { return kernels::weighted_dot(weights_, values_, values_); }

double ModeSamples::overlap(const ModeSamples& other) const {
  if (!(grid_ == other.grid_)) {
    throw Error(ErrorKind::InvalidParameter, "overlap of samples on different grids");
  }
  return kernels::weighted_dot(weights_, values_, other.values_);
}

ComplexAmplitude ModeSamples::amplitude(const Vec& r, double hbar) const {
  const std::size_t dim = grid_.dimension();
  const std::size_t n = grid_.nodes_per_axis();
  const std::size_t rows = grid_.size() / n;
  const auto last = grid_.coordinates(dim - 1);
  const double k = r[dim - 1] / hbar;
  ComplexAmplitude acc{0.0, 0.0};
  for (std::size_t row = 0; row < rows; ++row) {
    double phase0 = 0.0;
    std::size_t idx = row;
    for (std::size_t ax = dim - 1; ax-- > 0;) {
      phase0 += grid_.coordinates(ax)[idx % n] * r[ax] / hbar;
      idx /= n;
    }
    acc += kernels::fourier_row(std::span<const double>(weighted_).subspan(row * n, n), last,
                                k, phase0);
  }
  return acc * plane_wave_norm(hbar, dim);
}

Estimate<double> overlap_integral(const ModeDistribution& f, const ModeDistribution& g,
                                  const QuadratureGrid& grid, Evaluation mode) {
  if (f.dimension() != g.dimension()) {
    throw Error(ErrorKind::InvalidParameter, "distributions differ in dimension");
  }
  if (mode == Evaluation::Auto && equal_width_gaussians(f, g)) {
    const auto* a = f.as_gaussian();
    const auto* b = g.as_gaussian();
    const double q = a->width;
    return {std::exp(-(a->center - b->center).norm2() / (2.0 * q * q)), false};
  }
  const ModeSamples fs(f, grid);
  const ModeSamples gs(g, grid);
  const bool covered = grid.bounds().contains(f.support().intersect(g.support()));
  return {fs.overlap(gs), !covered};
}

ComplexAmplitude gaussian_position_amplitude(const IsotropicGaussian& f, const Vec& r,
                                             double hbar) {
  const double q2 = f.width * f.width;
  const auto dim = static_cast<double>(r.size());
  const double modulus = std::pow(q2 / (2.0 * std::numbers::pi * hbar * hbar), dim / 4.0) *
                         std::exp(-q2 * r.norm2() / (4.0 * hbar * hbar));
  return std::polar(modulus, f.center.dot(r) / hbar);
}

bool has_closed_amplitude(const ModeDistribution& f) {
  return !std::holds_alternative<GridSampled>(f.variant());
}

std::optional<ComplexAmplitude> closed_position_amplitude(const ModeDistribution& f,
                                                          const Vec& r, double hbar) {
  if (const auto* g = f.as_gaussian()) return gaussian_position_amplitude(*g, r, hbar);
  if (const auto* m = std::get_if<GaussianMixture>(&f.variant())) {
    ComplexAmplitude sum = 0.0;
    for (const auto& c : m->components) {
      sum += c.weight * gaussian_position_amplitude({c.center, c.width}, r, hbar);
    }
    return sum;
  }
  return std::nullopt;
}

Estimate<ComplexAmplitude> position_amplitude(const ModeDistribution& f, const Vec& r,
                                              const QuadratureGrid& grid,
                                              const PhysicalConfig& config, Evaluation mode) {
  config.validate();
  if (r.size() != f.dimension()) {
    throw Error(ErrorKind::InvalidParameter, "position dimension does not match distribution");
  }
  if (mode == Evaluation::Auto) {
    if (const auto closed = closed_position_amplitude(f, r, config.hbar)) return {*closed, false};
  }
  const ModeSamples fs(f, grid);
  const bool warn = !fs.covers_support() || !resolves_oscillation(grid, r, config.hbar);
  return {fs.amplitude(r, config.hbar), warn};
}

ComplexAmplitude double_overlap_bruteforce(const ModeDistribution& f, const ModeDistribution& g,
                                           const Vec& r, const QuadratureGrid& grid,
                                           const PhysicalConfig& config,
                                           std::size_t max_pairs) {
  config.validate();
  const std::size_t n = grid.size();
  if (n > max_pairs / n) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(n) + "^2 node pairs exceed the budget of " +
                    std::to_string(max_pairs));
  }
  const auto fv = f.sample(grid);
  const auto gv = g.sample(grid);
  const auto w = grid.weights();
  std::vector<Vec> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(grid.node(i));

  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = w[i] * fv[i];
    if (fi == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const double amp = fi * w[j] * gv[j];
      const double theta = (nodes[j] - nodes[i]).dot(r) / config.hbar;
      re += amp * std::cos(theta);
      im += amp * std::sin(theta);
    }
  }
  const double scale = std::pow(plane_wave_norm(config.hbar, grid.dimension()), 2.0);
  return {re * scale, im * scale};
}

}  // namespace twomode
