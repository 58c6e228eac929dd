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

#include "twomode/config.hpp"

#include <cmath>

#include "twomode/errors.hpp"

namespace twomode {

std::string_view to_string(Statistics s) {
  return s == Statistics::Boson ? "boson" : "fermion";
}

Statistics parse_statistics(std::string_view text) {
  if (text == "boson") return Statistics::Boson;
  if (text == "fermion") return Statistics::Fermion;
  throw Error(ErrorKind::InvalidParameter,
              "statistics must be \"boson\" or \"fermion\", got \"" + std::string(text) + "\"");
}

void PhysicalConfig::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw Error(ErrorKind::InvalidParameter, "hbar must be positive and finite");
  }
  if (dimension < 1 || dimension > 3) {
    throw Error(ErrorKind::InvalidParameter,
                "dimension must be 1, 2 or 3, got " + std::to_string(dimension));
  }
}

}  // namespace twomode
