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
#include <vector>

namespace twomode::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInvariantViolation = 2,
  kNumericalError = 3,
};

struct CommandResult {
  int exit_code = kSuccess;
  /// The table (or help text) destined for --out or standard output.
  std::string output;
  /// Diagnostics for standard error.
  std::string diagnostics;
  /// Value of --out; empty means standard output.
  std::string out_path;
};

/// Runs one invocation; `args` excludes the program name. Nothing is
/// written to the process streams or to --out here.
CommandResult run(const std::vector<std::string>& args);

/// `%.12g`, or the sentinel "non-finite".
std::string format_number(double v);

}  // namespace twomode::cli
