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

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace twomode {

inline constexpr std::size_t kMaxDimension = 3;

/// Small fixed-capacity vector for momenta and positions (d <= 3).
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim, double fill = 0.0);
  Vec(std::initializer_list<double> values);

  static Vec unit(std::size_t dim, std::size_t axis);

  std::size_t size() const noexcept { return size_; }
  double operator[](std::size_t i) const noexcept { return data_[i]; }
  double& operator[](std::size_t i) noexcept { return data_[i]; }
  const double* begin() const noexcept { return data_.data(); }
  const double* end() const noexcept { return data_.data() + size_; }

  double dot(const Vec& other) const;
  double norm2() const { return dot(*this); }
  double norm() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(double s) noexcept;

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend bool operator==(const Vec& a, const Vec& b) noexcept;

  std::string str() const;

 private:
  std::array<double, kMaxDimension> data_{};
  std::size_t size_ = 0;
};

}  // namespace twomode
