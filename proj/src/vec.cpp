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

#include "twomode/vec.hpp"

#include <cmath>
#include <sstream>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDimension) {
    throw Error(ErrorKind::InvalidParameter,
                "vector dimension must be 1.." + std::to_string(kMaxDimension) +
                    ", got " + std::to_string(dim));
  }
}

void check_same(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidParameter, "vector dimension mismatch: " +
                                                 std::to_string(a.size()) + " vs " +
                                                 std::to_string(b.size()));
  }
}

}  // namespace

Vec::Vec(std::size_t dim, double fill) : size_(dim) {
  check_dim(dim);
  for (std::size_t i = 0; i < dim; ++i) data_[i] = fill;
}

Vec::Vec(std::initializer_list<double> values) : size_(values.size()) {
  check_dim(size_);
  std::size_t i = 0;
  for (double v : values) data_[i++] = v;
}

Vec Vec::unit(std::size_t dim, std::size_t axis) {
  Vec u(dim);
  if (axis >= dim) throw Error(ErrorKind::InvalidParameter, "unit axis out of range");
  u[axis] = 1.0;
  return u;
}

double Vec::dot(const Vec& other) const {
  check_same(*this, other);
  double s = 0.0;
  for (std::size_t i = 0; i < size_; ++i) s += data_[i] * other.data_[i];
  return s;
}

double Vec::norm() const { return std::sqrt(norm2()); }

Vec& Vec::operator+=(const Vec& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < size_; ++i) data_[i] += other.data_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < size_; ++i) data_[i] -= other.data_[i];
  return *this;
}

Vec& Vec::operator*=(double s) noexcept {
  for (std::size_t i = 0; i < size_; ++i) data_[i] *= s;
  return *this;
}

bool operator==(const Vec& a, const Vec& b) noexcept {
  if (a.size_ != b.size_) return false;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.data_[i] != b.data_[i]) return false;
  }
  return true;
}

std::string Vec::str() const {
  std::ostringstream os;
  os.precision(12);
  os << '(';
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) os << ", ";
    os << data_[i];
  }
  os << ')';
  return os.str();
}

}  // namespace twomode
