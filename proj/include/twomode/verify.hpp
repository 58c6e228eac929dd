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

#include <cstdint>
#include <string>
#include <vector>

namespace twomode {

struct VerifyOptions {
  std::size_t families = 200;
  std::size_t boson_sweep = 1000;
  std::uint64_t seed = 1;
  int dimension = 1;
  /// Fermion lower bound is checked only on states with beta at most this.
  double beta_cap = 0.999;
  /// Test hook: evaluate the fermion norm with the boson sign.
  bool inject_sign_fault = false;
};

struct CheckResult {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  /// Largest amount by which the inequality was exceeded (<= 0 when held).
  double worst_excess = 0.0;

  bool passed() const noexcept { return evaluated > 0 && violations == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Randomized battery of the norm, probability, amplitude and
/// complementarity inequalities.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace twomode
