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

#include <random>
#include <string>

#include "doctest.h"
#include "support/check.hpp"
#include "twomode/random_states.hpp"
#include "twomode/state_io.hpp"

using namespace twomode;

namespace {

std::string error_text(const std::string& text) {
  try {
    parse_state(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
    return e.what();
  }
  FAIL("parse succeeded unexpectedly");
  return {};
}

}  // namespace

TEST_CASE("round trip preserves the state") {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 30; ++k) {
    const int d = 1 + k % 3;
    const PhysicalConfig c{k % 2 ? 0.5 : 1.0, d};
    const auto stats = k % 2 ? Statistics::Fermion : Statistics::Boson;
    const auto s = k % 5 == 4 && d < 3 ? disjoint_state(rng, stats, c) : random_state(rng, stats, c);
    const auto text = serialize_state(s);
    const auto back = parse_state(text);
    CHECK(serialize_state(back) == text);
    CHECK(back.statistics() == s.statistics());
    CHECK(back.config().hbar == s.config().hbar);
    const Vec p = random_point(rng, d, 2.0);
    CHECK(back.f()(p) == s.f()(p));
    CHECK(back.g()(p) == s.g()(p));
  }
}

TEST_CASE("gaussian document") {
  const auto s = parse_state(R"({"statistics": "fermion", "hbar": 1, "dimension": 2,
    "f": {"type": "gaussian", "center": [0, 0], "q": 1},
    "g": {"type": "gaussian", "center": [2, 0], "q": 1}})");
  CHECK(s.statistics() == Statistics::Fermion);
  CHECK(s.g().as_gaussian()->center == Vec{2.0, 0.0});
}

TEST_CASE("field diagnostics") {
  const std::string head = R"({"statistics": "boson", "hbar": 1, "dimension": 1, )";
  CHECK(error_text(head + R"("f": {"type": "gaussian", "center": [0], "q": -1},
    "g": {"type": "gaussian", "center": [0], "q": 1}})")
            .find("f.q") != std::string::npos);
  CHECK(error_text(head + R"("f": {"type": "gaussian", "center": [0, 1], "q": 1},
    "g": {"type": "gaussian", "center": [0], "q": 1}})")
            .find("f.center") != std::string::npos);
  CHECK(error_text(head + R"("f": {"type": "gaussian", "center": [0], "q": 1},
    "g": {"type": "spline"}})")
            .find("g.type") != std::string::npos);
  CHECK(error_text(head + R"("f": {"type": "gaussian", "center": [0], "q": 1}})")
            .find("'g'") != std::string::npos);
  CHECK(error_text(R"({"statistics": "anyon", "hbar": 1, "dimension": 1})")
            .find("statistics") != std::string::npos);
  CHECK(error_text(head + R"("f": {"type": "grid", "bounds": [[-1, 1]], "nodes": 3,
    "values": [1, 2]}, "g": {"type": "gaussian", "center": [0], "q": 1}})")
            .find("f.values") != std::string::npos);
}

TEST_CASE("syntax errors report the line") {
  const auto msg = error_text("{\n  \"statistics\": \"boson\",\n  \"hbar\": ,\n}");
  CHECK(msg.find("line 3") != std::string::npos);
}
