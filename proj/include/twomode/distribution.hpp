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

#include <variant>
#include <vector>

#include "twomode/config.hpp"
#include "twomode/grid.hpp"
#include "twomode/vec.hpp"

namespace twomode {

/// Support half-width of a Gaussian component, in units of its width Q.
inline constexpr double kSupportWidths = 6.0;

/// f(p) = N exp(-|p - center|^2 / Q^2), N = (2 / (pi Q^2))^{d/4}.
struct IsotropicGaussian {
  Vec center;
  double width = 1.0;
};

struct GaussianComponent {
  Vec center;
  double width = 1.0;
  double weight = 1.0;
};

/// f(p) = sum_k weight_k N(Q_k) exp(-|p - c_k|^2 / Q_k^2). Not normalized
/// unless the weights were chosen (or renormalized) to make it so.
struct GaussianMixture {
  std::vector<GaussianComponent> components;
};

/// Node values on a grid; evaluated elsewhere by multilinear interpolation
/// and zero outside the grid bounds.
struct GridSampled {
  QuadratureGrid grid;
  std::vector<double> values;
};

/// Real momentum-space amplitude of one particle.
class ModeDistribution {
 public:
  using Variant = std::variant<IsotropicGaussian, GaussianMixture, GridSampled>;

  explicit ModeDistribution(Variant v);

  const Variant& variant() const noexcept { return v_; }
  std::size_t dimension() const noexcept { return dim_; }

  const IsotropicGaussian* as_gaussian() const {
    return std::get_if<IsotropicGaussian>(&v_);
  }

  double operator()(const Vec& p) const;
  /// Values at every node of `grid`, in flat order.
  std::vector<double> sample(const QuadratureGrid& grid) const;

  /// Box outside which the amplitude is negligible (Gaussians: centre
  /// +- 6Q; grids: their bounds).
  Box support() const;
  double min_width() const;
  double max_width() const;

  ModeDistribution translated(const Vec& shift) const;

 private:
  Variant v_;
  std::size_t dim_ = 0;
};

double gaussian_normalization(double width, std::size_t dimension);

/// Throws InvalidParameter for width <= 0 or a centre whose length differs
/// from config.dimension.
ModeDistribution make_gaussian(const Vec& center, double width,
                               const PhysicalConfig& config);
ModeDistribution make_mixture(std::vector<GaussianComponent> components,
                              const PhysicalConfig& config);
ModeDistribution make_grid_sampled(QuadratureGrid grid, std::vector<double> values);

struct ValidationReport {
  bool is_nonnegative = false;
  double norm_value = 0.0;
  bool ok = false;
};

ValidationReport validate_distribution(const ModeDistribution& f,
                                       const QuadratureGrid& grid,
                                       double tol = 1e-6);

/// Rescales so that the quadrature of f^2 on `grid` is one. Gaussians are
/// already normalized and come back unchanged.
ModeDistribution renormalize(const ModeDistribution& f, const QuadratureGrid& grid);

}  // namespace twomode
