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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = twomode::cli::run(args);
  std::cerr << result.diagnostics;
  if (result.out_path.empty()) {
    std::cout << result.output;
    return result.exit_code;
  }
  std::ofstream file(result.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << result.out_path << " for writing\n";
    return twomode::cli::kUsageError;
  }
  file << result.output;
  return result.exit_code;
}
