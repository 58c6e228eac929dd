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

#include "twomode/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "twomode/errors.hpp"
#include "twomode/kernels.hpp"

namespace twomode {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_width(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw Error(ErrorKind::InvalidParameter, "width Q must be positive and finite");
  }
}

void check_center(const Vec& center, std::size_t dim) {
  if (center.size() != dim) {
    throw Error(ErrorKind::InvalidParameter,
                "centre has " + std::to_string(center.size()) + " components, expected " +
                    std::to_string(dim));
  }
  for (double c : center) {
    if (!std::isfinite(c)) throw Error(ErrorKind::InvalidParameter, "centre must be finite");
  }
}

double gaussian_value(const Vec& center, double width, const Vec& p) {
  return gaussian_normalization(width, p.size()) *
         std::exp(-(p - center).norm2() / (width * width));
}

// Adds weight * N * exp(-|p - c|^2 / Q^2) at every node, using the
// tensor-product structure of both the grid and the Gaussian.
void accumulate_gaussian(const QuadratureGrid& grid, const Vec& center, double width,
                         double weight, std::vector<double>& out) {
  const std::size_t dim = grid.dimension();
  const std::size_t n = grid.nodes_per_axis();
  std::vector<std::vector<double>> factors(dim, std::vector<double>(n));
  for (std::size_t ax = 0; ax < dim; ++ax) {
    const auto x = grid.coordinates(ax);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = (x[i] - center[ax]) / width;
      factors[ax][i] = std::exp(-u * u);
    }
  }
  const double scale = weight * gaussian_normalization(width, dim);
  for (std::size_t k = 0; k < out.size(); ++k) {
    double v = scale;
    std::size_t idx = k;
    for (std::size_t ax = dim; ax-- > 0;) {
      v *= factors[ax][idx % n];
      idx /= n;
    }
    out[k] += v;
  }
}

double interpolate(const GridSampled& s, const Vec& p) {
  const QuadratureGrid& grid = s.grid;
  const std::size_t dim = grid.dimension();
  const std::size_t n = grid.nodes_per_axis();
  std::array<std::size_t, kMaxDimension> base{};
  std::array<double, kMaxDimension> frac{};
  for (std::size_t ax = 0; ax < dim; ++ax) {
    const auto x = grid.coordinates(ax);
    if (p[ax] < x.front() || p[ax] > x.back()) return 0.0;
    const double t = (p[ax] - x.front()) / grid.spacing(ax);
    auto i = static_cast<std::size_t>(std::floor(t));
    if (i >= n - 1) i = n - 2;
    base[ax] = i;
    frac[ax] = std::clamp(t - static_cast<double>(i), 0.0, 1.0);
  }
  double acc = 0.0;
  for (std::size_t corner = 0; corner < (std::size_t{1} << dim); ++corner) {
    double w = 1.0;
    std::size_t flat = 0;
    for (std::size_t ax = 0; ax < dim; ++ax) {
      const bool up = (corner >> ax) & 1U;
      w *= up ? frac[ax] : 1.0 - frac[ax];
      flat = flat * n + base[ax] + (up ? 1 : 0);
    }
    if (w != 0.0) acc += w * s.values[flat];
  }
  return acc;
}

Box gaussian_box(const Vec& center, double width) {
  Box b{center, center};
  for (std::size_t i = 0; i < center.size(); ++i) {
    b.lower[i] -= kSupportWidths * width;
    b.upper[i] += kSupportWidths * width;
  }
  return b;
}

// Per-axis width Q of a Gaussian with the same second moment of f^2
// (Q = 2 sigma). Falls back to a twelfth of the axis range for empty grids.
std::vector<double> effective_widths(const GridSampled& s) {
  const QuadratureGrid& grid = s.grid;
  const std::size_t dim = grid.dimension();
  const auto w = grid.weights();
  double mass = 0.0;
  std::vector<double> mean(dim, 0.0);
  std::vector<double> second(dim, 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double m = w[k] * s.values[k] * s.values[k];
    if (m == 0.0) continue;
    const Vec p = grid.node(k);
    mass += m;
    for (std::size_t ax = 0; ax < dim; ++ax) {
      mean[ax] += m * p[ax];
      second[ax] += m * p[ax] * p[ax];
    }
  }
  std::vector<double> q(dim);
  for (std::size_t ax = 0; ax < dim; ++ax) {
    const double fallback = grid.axis(ax).width() / (2.0 * kSupportWidths);
    if (!(mass > 0.0)) {
      q[ax] = fallback;
      continue;
    }
    const double mu = mean[ax] / mass;
    const double var = second[ax] / mass - mu * mu;
    q[ax] = var > 0.0 ? 2.0 * std::sqrt(var) : grid.spacing(ax);
  }
  return q;
}

}  // namespace

double gaussian_normalization(double width, std::size_t dimension) {
  return std::pow(2.0 / (std::numbers::pi * width * width),
                  static_cast<double>(dimension) / 4.0);
}

ModeDistribution::ModeDistribution(Variant v) : v_(std::move(v)) {
  dim_ = std::visit(Overloaded{
                        [](const IsotropicGaussian& g) { return g.center.size(); },
                        [](const GaussianMixture& m) {
                          if (m.components.empty()) {
                            throw Error(ErrorKind::InvalidParameter, "mixture has no components");
                          }
                          return m.components.front().center.size();
                        },
                        [](const GridSampled& s) { return s.grid.dimension(); },
                    },
                    v_);
}

double ModeDistribution::operator()(const Vec& p) const {
  return std::visit(Overloaded{
                        [&](const IsotropicGaussian& g) { return gaussian_value(g.center, g.width, p); },
                        [&](const GaussianMixture& m) {
                          double s = 0.0;
                          for (const auto& c : m.components) {
                            s += c.weight * gaussian_value(c.center, c.width, p);
                          }
                          return s;
                        },
                        [&](const GridSampled& s) { return interpolate(s, p); },
                    },
                    v_);
}

std::vector<double> ModeDistribution::sample(const QuadratureGrid& grid) const {
  if (grid.dimension() != dim_) {
    throw Error(ErrorKind::InvalidParameter, "grid dimension does not match distribution");
  }
  std::vector<double> out(grid.size(), 0.0);
  std::visit(Overloaded{
                 [&](const IsotropicGaussian& g) {
                   accumulate_gaussian(grid, g.center, g.width, 1.0, out);
                 },
                 [&](const GaussianMixture& m) {
                   for (const auto& c : m.components) {
                     accumulate_gaussian(grid, c.center, c.width, c.weight, out);
                   }
                 },
                 [&](const GridSampled& s) {
                   if (s.grid == grid) {
                     out = s.values;
                     return;
                   }
                   for (std::size_t k = 0; k < out.size(); ++k) out[k] = interpolate(s, grid.node(k));
                 },
             },
             v_);
  return out;
}

Box ModeDistribution::support() const {
  return std::visit(Overloaded{
                        [](const IsotropicGaussian& g) { return gaussian_box(g.center, g.width); },
                        [](const GaussianMixture& m) {
                          std::optional<Box> box;
                          for (const auto& c : m.components) {
                            if (c.weight == 0.0) continue;
                            Box b = gaussian_box(c.center, c.width);
                            box = box ? box->unite(b) : b;
                          }
                          return box ? *box
                                     : gaussian_box(m.components.front().center, 0.0);
                        },
                        [](const GridSampled& s) { return s.grid.bounds(); },
                    },
                    v_);
}

double ModeDistribution::min_width() const {
  return std::visit(Overloaded{
                        [](const IsotropicGaussian& g) { return g.width; },
                        [](const GaussianMixture& m) {
                          double w = m.components.front().width;
                          for (const auto& c : m.components) w = std::min(w, c.width);
                          return w;
                        },
                        [](const GridSampled& s) {
                          const auto q = effective_widths(s);
                          return *std::min_element(q.begin(), q.end());
                        },
                    },
                    v_);
}

double ModeDistribution::max_width() const {
  return std::visit(Overloaded{
                        [](const IsotropicGaussian& g) { return g.width; },
                        [](const GaussianMixture& m) {
                          double w = m.components.front().width;
                          for (const auto& c : m.components) w = std::max(w, c.width);
                          return w;
                        },
                        [](const GridSampled& s) {
                          const auto q = effective_widths(s);
                          return *std::max_element(q.begin(), q.end());
                        },
                    },
                    v_);
}

ModeDistribution ModeDistribution::translated(const Vec& shift) const {
  if (shift.size() != dim_) {
    throw Error(ErrorKind::InvalidParameter, "shift dimension does not match distribution");
  }
  return std::visit(Overloaded{
                        [&](IsotropicGaussian g) {
                          g.center += shift;
                          return ModeDistribution(std::move(g));
                        },
                        [&](GaussianMixture m) {
                          for (auto& c : m.components) c.center += shift;
                          return ModeDistribution(std::move(m));
                        },
                        [&](const GridSampled& s) {
                          auto axes = s.grid.axes();
                          for (std::size_t i = 0; i < axes.size(); ++i) {
                            axes[i].lower += shift[i];
                            axes[i].upper += shift[i];
                          }
                          return ModeDistribution(GridSampled{
                              QuadratureGrid(std::move(axes), s.grid.nodes_per_axis(), s.grid.rule()),
                              s.values});
                        },
                    },
                    v_);
}

ModeDistribution make_gaussian(const Vec& center, double width, const PhysicalConfig& config) {
  config.validate();
  check_width(width);
  check_center(center, static_cast<std::size_t>(config.dimension));
  return ModeDistribution(IsotropicGaussian{center, width});
}

ModeDistribution make_mixture(std::vector<GaussianComponent> components,
                              const PhysicalConfig& config) {
  config.validate();
  if (components.empty()) throw Error(ErrorKind::InvalidParameter, "mixture has no components");
  bool any = false;
  for (const auto& c : components) {
    check_width(c.width);
    check_center(c.center, static_cast<std::size_t>(config.dimension));
    if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) {
      throw Error(ErrorKind::InvalidParameter, "mixture weights must be finite and >= 0");
    }
    any = any || c.weight > 0.0;
  }
  if (!any) throw Error(ErrorKind::DegenerateDistribution, "all mixture weights are zero");
  return ModeDistribution(GaussianMixture{std::move(components)});
}

ModeDistribution make_grid_sampled(QuadratureGrid grid, std::vector<double> values) {
  if (values.size() != grid.size()) {
    throw Error(ErrorKind::InvalidParameter,
                "grid has " + std::to_string(grid.size()) + " nodes but " +
                    std::to_string(values.size()) + " values were given");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidParameter, "grid values must be finite");
  }
  return ModeDistribution(GridSampled{std::move(grid), std::move(values)});
}

ValidationReport validate_distribution(const ModeDistribution& f, const QuadratureGrid& grid,
                                       double tol) {
  ValidationReport report;
  const auto values = f.sample(grid);
  report.is_nonnegative = std::none_of(values.begin(), values.end(), [](double v) { return v < 0.0; });
  if (const auto* s = std::get_if<GridSampled>(&f.variant())) {
    report.is_nonnegative = report.is_nonnegative &&
                            std::none_of(s->values.begin(), s->values.end(),
                                         [](double v) { return v < 0.0; });
  }
  const auto w = grid.weights();
  report.norm_value = kernels::weighted_dot(w, values, values);
  report.ok = report.is_nonnegative && std::abs(report.norm_value - 1.0) <= tol;
  return report;
}

ModeDistribution renormalize(const ModeDistribution& f, const QuadratureGrid& grid) {
  const auto values = f.sample(grid);
  const double norm = kernels::weighted_dot(grid.weights(), values, values);
  if (!(norm > 0.0)) {
    throw Error(ErrorKind::DegenerateDistribution, "distribution has zero norm on the grid");
  }
  const double scale = 1.0 / std::sqrt(norm);
  return std::visit(Overloaded{
                        [&](const IsotropicGaussian& g) { return ModeDistribution(g); },
                        [&](GaussianMixture m) {
                          for (auto& c : m.components) c.weight *= scale;
                          return ModeDistribution(std::move(m));
                        },
                        [&](GridSampled s) {
                          for (auto& v : s.values) v *= scale;
                          return ModeDistribution(std::move(s));
                        },
                    },
                    f.variant());
}

}  // namespace twomode
