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

#include "twomode/errors.hpp"

namespace twomode {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::DegenerateDistribution: return "degenerate-distribution";
    case ErrorKind::IndeterminateState: return "indeterminate-state";
    case ErrorKind::SingularPoint: return "singular-point";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::DegenerateDensity: return "degenerate-density";
    case ErrorKind::InsufficientStatistics: return "insufficient-statistics";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace twomode
