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

#include <cstddef>
#include <span>
#include <vector>

#include "twomode/vec.hpp"

namespace twomode {

enum class QuadratureRule { Midpoint, Trapezoid };

struct AxisRange {
  double lower = 0.0;
  double upper = 0.0;

  double width() const noexcept { return upper - lower; }
  friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

/// Axis-aligned box, used for effective supports.
struct Box {
  Vec lower;
  Vec upper;

  bool empty() const;
  bool contains(const Box& inner) const;
  bool contains(const Vec& point) const;
  Box intersect(const Box& other) const;
  Box unite(const Box& other) const;
};

/// Tensor-product grid with the same node count on every axis. Nodes are
/// flattened row-major: axis 0 varies slowest, the last axis fastest.
///
/// Trapezoid places nodes on both bounds with half-weight ends; Midpoint
/// places them at the centres of equal cells. In both cases the weight of a
/// node equals the volume of the cell it owns (clipped to the bounds), which
/// the Monte Carlo sampler relies on.
class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<AxisRange> axes, std::size_t nodes_per_axis,
                 QuadratureRule rule = QuadratureRule::Trapezoid);

  /// Same range on every axis.
  static QuadratureGrid cube(std::size_t dimension, AxisRange range,
                             std::size_t nodes_per_axis,
                             QuadratureRule rule = QuadratureRule::Trapezoid);

  std::size_t dimension() const noexcept { return axes_.size(); }
  std::size_t nodes_per_axis() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return size_; }
  QuadratureRule rule() const noexcept { return rule_; }
  const AxisRange& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<AxisRange>& axes() const noexcept { return axes_; }

  /// Node spacing along an axis.
  double spacing(std::size_t axis) const;
  std::span<const double> coordinates(std::size_t axis) const;
  std::span<const double> axis_weights(std::size_t axis) const;

  /// Flattened product weights, one per node.
  std::vector<double> weights() const;
  Vec node(std::size_t flat_index) const;
  /// Cell owned by a node, clipped to the grid bounds.
  Box cell(std::size_t flat_index) const;
  Box bounds() const;
  double volume() const;

  /// Grid with the same bounds and rule but a different node count.
  QuadratureGrid refined(std::size_t nodes_per_axis) const;

  friend bool operator==(const QuadratureGrid& a, const QuadratureGrid& b);

 private:
  std::vector<AxisRange> axes_;
  std::size_t nodes_;
  QuadratureRule rule_;
  std::size_t size_;
  std::vector<std::vector<double>> coords_;
  std::vector<std::vector<double>> weights_;
};

}  // namespace twomode
