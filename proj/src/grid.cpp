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

#include "twomode/grid.hpp"

#include <algorithm>
#include <cmath>

#include "twomode/errors.hpp"

namespace twomode {

bool Box::empty() const {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) return true;
  }
  return false;
}

bool Box::contains(const Box& inner) const {
  if (inner.empty()) return true;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (inner.lower[i] < lower[i] || inner.upper[i] > upper[i]) return false;
  }
  return true;
}

bool Box::contains(const Vec& point) const {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (point[i] < lower[i] || point[i] > upper[i]) return false;
  }
  return true;
}

Box Box::intersect(const Box& other) const {
  Box out = *this;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    out.lower[i] = std::max(lower[i], other.lower[i]);
    out.upper[i] = std::min(upper[i], other.upper[i]);
  }
  return out;
}

Box Box::unite(const Box& other) const {
  Box out = *this;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    out.lower[i] = std::min(lower[i], other.lower[i]);
    out.upper[i] = std::max(upper[i], other.upper[i]);
  }
  return out;
}

QuadratureGrid::QuadratureGrid(std::vector<AxisRange> axes, std::size_t nodes_per_axis,
                               QuadratureRule rule)
    : axes_(std::move(axes)), nodes_(nodes_per_axis), rule_(rule), size_(1) {
  if (axes_.empty() || axes_.size() > kMaxDimension) {
    throw Error(ErrorKind::InvalidParameter, "grid needs 1..3 axes");
  }
  if (nodes_ < 2) {
    throw Error(ErrorKind::InvalidParameter, "grid needs at least 2 nodes per axis");
  }
  for (const auto& a : axes_) {
    if (!std::isfinite(a.lower) || !std::isfinite(a.upper) || !(a.lower < a.upper)) {
      throw Error(ErrorKind::InvalidParameter, "grid bounds must be finite with lower < upper");
    }
    size_ *= nodes_;
  }

  coords_.resize(axes_.size());
  weights_.resize(axes_.size());
  for (std::size_t ax = 0; ax < axes_.size(); ++ax) {
    const double lo = axes_[ax].lower;
    const double h = spacing(ax);
    auto& x = coords_[ax];
    auto& w = weights_[ax];
    x.resize(nodes_);
    w.assign(nodes_, h);
    if (rule_ == QuadratureRule::Trapezoid) {
      for (std::size_t i = 0; i < nodes_; ++i) x[i] = lo + h * static_cast<double>(i);
      x.back() = axes_[ax].upper;
      w.front() = w.back() = 0.5 * h;
    } else {
      for (std::size_t i = 0; i < nodes_; ++i) x[i] = lo + h * (static_cast<double>(i) + 0.5);
    }
  }
}

QuadratureGrid QuadratureGrid::cube(std::size_t dimension, AxisRange range,
                                    std::size_t nodes_per_axis, QuadratureRule rule) {
  return QuadratureGrid(std::vector<AxisRange>(dimension, range), nodes_per_axis, rule);
}

double QuadratureGrid::spacing(std::size_t axis) const {
  const double n = static_cast<double>(nodes_);
  const double width = axes_.at(axis).width();
  return rule_ == QuadratureRule::Trapezoid ? width / (n - 1.0) : width / n;
}

std::span<const double> QuadratureGrid::coordinates(std::size_t axis) const {
  return coords_.at(axis);
}

std::span<const double> QuadratureGrid::axis_weights(std::size_t axis) const {
  return weights_.at(axis);
}

std::vector<double> QuadratureGrid::weights() const {
  std::vector<double> out(size_, 1.0);
  std::size_t stride = size_;
  for (std::size_t ax = 0; ax < axes_.size(); ++ax) {
    stride /= nodes_;
    const auto& w = weights_[ax];
    for (std::size_t k = 0; k < size_; ++k) out[k] *= w[(k / stride) % nodes_];
  }
  return out;
}

Vec QuadratureGrid::node(std::size_t flat_index) const {
  Vec p(axes_.size());
  for (std::size_t ax = axes_.size(); ax-- > 0;) {
    p[ax] = coords_[ax][flat_index % nodes_];
    flat_index /= nodes_;
  }
  return p;
}

Box QuadratureGrid::cell(std::size_t flat_index) const {
  Box b{Vec(axes_.size()), Vec(axes_.size())};
  for (std::size_t ax = axes_.size(); ax-- > 0;) {
    const double x = coords_[ax][flat_index % nodes_];
    const double half = 0.5 * spacing(ax);
    b.lower[ax] = std::max(axes_[ax].lower, x - half);
    b.upper[ax] = std::min(axes_[ax].upper, x + half);
    flat_index /= nodes_;
  }
  return b;
}

Box QuadratureGrid::bounds() const {
  Box b{Vec(axes_.size()), Vec(axes_.size())};
  for (std::size_t ax = 0; ax < axes_.size(); ++ax) {
    b.lower[ax] = axes_[ax].lower;
    b.upper[ax] = axes_[ax].upper;
  }
  return b;
}

double QuadratureGrid::volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.width();
  return v;
}

QuadratureGrid QuadratureGrid::refined(std::size_t nodes_per_axis) const {
  return QuadratureGrid(axes_, nodes_per_axis, rule_);
}

bool operator==(const QuadratureGrid& a, const QuadratureGrid& b) {
  return a.axes_ == b.axes_ && a.nodes_ == b.nodes_ && a.rule_ == b.rule_;
}

}  // namespace twomode
