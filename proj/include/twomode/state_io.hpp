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

#include "json.hpp"
#include "twomode/state.hpp"

namespace twomode {

// Text form of a state:
//   {"statistics": "boson"|"fermion", "hbar": 1, "dimension": 1,
//    "f": {"type": "gaussian", "center": [0], "q": 1},
//    "g": {"type": "mixture", "components": [{"center": [..], "q": .., "weight": ..}]}
//      or {"type": "grid", "bounds": [[lo, hi], ..], "nodes": n,
//          "rule": "trapezoid"|"midpoint", "values": [..]}}

nlohmann::json to_json(const ModeDistribution& f);
nlohmann::json to_json(const TwoParticleState& state);

/// Throws InvalidParameter naming the offending field.
ModeDistribution distribution_from_json(const nlohmann::json& j, const PhysicalConfig& config,
                                        const std::string& path = "");
TwoParticleState state_from_json(const nlohmann::json& j);

std::string serialize_state(const TwoParticleState& state);
/// Parse errors carry the line and column of the failure.
TwoParticleState parse_state(std::string_view text);

}  // namespace twomode
