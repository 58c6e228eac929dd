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

#include <string>
#include <string_view>

namespace twomode {

/// Exchange statistics. Selects the upper (boson) or lower (fermion) sign
/// in every expression with a double sign.
enum class Statistics { Boson, Fermion };

constexpr double sign(Statistics s) noexcept {
  return s == Statistics::Boson ? 1.0 : -1.0;
}

std::string_view to_string(Statistics s);
Statistics parse_statistics(std::string_view text);

struct PhysicalConfig {
  double hbar = 1.0;
  int dimension = 3;

  /// Throws InvalidParameter unless hbar > 0 and dimension is 1, 2 or 3.
  void validate() const;
};

}  // namespace twomode
