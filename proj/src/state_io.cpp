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

#include "twomode/state_io.hpp"

#include <algorithm>

#include "twomode/errors.hpp"

namespace twomode {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::InvalidParameter, "field '" + path + "': " + what);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double width(const json& j, const std::string& path) {
  const double q = number(j, path);
  if (!(q > 0.0)) fail(path, "width must be positive");
  return q;
}

Vec vector(const json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  if (j.size() != dim) {
    fail(path, "expected " + std::to_string(dim) + " components, got " + std::to_string(j.size()));
  }
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = number(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

json vector_json(const Vec& v) { return json(std::vector<double>(v.begin(), v.end())); }

std::string rule_name(QuadratureRule r) {
  return r == QuadratureRule::Trapezoid ? "trapezoid" : "midpoint";
}

}  // namespace

json to_json(const ModeDistribution& f) {
  return std::visit(
      Overloaded{
          [](const IsotropicGaussian& g) {
            return json{{"type", "gaussian"}, {"center", vector_json(g.center)}, {"q", g.width}};
          },
          [](const GaussianMixture& m) {
            json comps = json::array();
            for (const auto& c : m.components) {
              comps.push_back({{"center", vector_json(c.center)}, {"q", c.width}, {"weight", c.weight}});
            }
            return json{{"type", "mixture"}, {"components", comps}};
          },
          [](const GridSampled& s) {
            json bounds = json::array();
            for (const auto& a : s.grid.axes()) bounds.push_back({a.lower, a.upper});
            return json{{"type", "grid"},
                        {"bounds", bounds},
                        {"nodes", s.grid.nodes_per_axis()},
                        {"rule", rule_name(s.grid.rule())},
                        {"values", s.values}};
          },
      },
      f.variant());
}

json to_json(const TwoParticleState& state) {
  return json{{"statistics", std::string(to_string(state.statistics()))},
              {"hbar", state.config().hbar},
              {"dimension", state.config().dimension},
              {"f", to_json(state.f())},
              {"g", to_json(state.g())}};
}

ModeDistribution distribution_from_json(const json& j, const PhysicalConfig& config,
                                        const std::string& path) {
  const auto dim = static_cast<std::size_t>(config.dimension);
  const json& type = require(j, "type", path);
  if (!type.is_string()) fail(path + ".type", "expected a string");
  const auto kind = type.get<std::string>();
  try {
    if (kind == "gaussian") {
      return make_gaussian(vector(require(j, "center", path), path + ".center", dim),
                           width(require(j, "q", path), path + ".q"), config);
    }
    if (kind == "mixture") {
      const json& comps = require(j, "components", path);
      if (!comps.is_array() || comps.empty()) fail(path + ".components", "expected a non-empty array");
      std::vector<GaussianComponent> out;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string p = path + ".components[" + std::to_string(i) + "]";
        const json& c = comps[i];
        out.push_back({vector(require(c, "center", p), p + ".center", dim),
                       width(require(c, "q", p), p + ".q"),
                       c.contains("weight") ? number(c["weight"], p + ".weight") : 1.0});
      }
      return make_mixture(std::move(out), config);
    }
    if (kind == "grid") {
      const json& bounds = require(j, "bounds", path);
      if (!bounds.is_array() || bounds.size() != dim) {
        fail(path + ".bounds", "expected " + std::to_string(dim) + " [lower, upper] pairs");
      }
      std::vector<AxisRange> axes;
      for (std::size_t i = 0; i < dim; ++i) {
        const std::string p = path + ".bounds[" + std::to_string(i) + "]";
        if (!bounds[i].is_array() || bounds[i].size() != 2) fail(p, "expected [lower, upper]");
        axes.push_back({number(bounds[i][0], p + "[0]"), number(bounds[i][1], p + "[1]")});
      }
      const json& nodes = require(j, "nodes", path);
      if (!nodes.is_number_unsigned()) fail(path + ".nodes", "expected a positive integer");
      QuadratureRule rule = QuadratureRule::Trapezoid;
      if (j.contains("rule")) {
        const auto& r = j["rule"];
        if (r == "trapezoid") rule = QuadratureRule::Trapezoid;
        else if (r == "midpoint") rule = QuadratureRule::Midpoint;
        else fail(path + ".rule", "expected \"trapezoid\" or \"midpoint\"");
      }
      const json& values = require(j, "values", path);
      if (!values.is_array()) fail(path + ".values", "expected an array of numbers");
      std::size_t expected = 1;
      for (std::size_t i = 0; i < dim; ++i) expected *= nodes.get<std::size_t>();
      if (values.size() != expected) {
        fail(path + ".values", "expected " + std::to_string(expected) + " values, got " +
                                   std::to_string(values.size()));
      }
      std::vector<double> v;
      v.reserve(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        v.push_back(number(values[i], path + ".values[" + std::to_string(i) + "]"));
      }
      return make_grid_sampled(QuadratureGrid(std::move(axes), nodes.get<std::size_t>(), rule),
                               std::move(v));
    }
  } catch (const Error& e) {
    if (std::string_view(e.what()).find("field '") != std::string_view::npos) throw;
    fail(path, e.what());
  }
  fail(path + ".type", "unknown distribution type \"" + kind + "\"");
}

TwoParticleState state_from_json(const json& j) {
  if (!j.is_object()) fail("", "state must be an object");
  const json& stats = require(j, "statistics", "");
  if (!stats.is_string()) fail("statistics", "expected \"boson\" or \"fermion\"");
  Statistics statistics;
  try {
    statistics = parse_statistics(stats.get<std::string>());
  } catch (const Error& e) {
    fail("statistics", e.what());
  }
  PhysicalConfig config;
  if (j.contains("hbar")) config.hbar = number(j["hbar"], "hbar");
  if (j.contains("dimension")) {
    if (!j["dimension"].is_number_integer()) fail("dimension", "expected an integer");
    config.dimension = j["dimension"].get<int>();
  }
  try {
    config.validate();
  } catch (const Error& e) {
    fail("hbar/dimension", e.what());
  }
  return TwoParticleState(distribution_from_json(require(j, "f", ""), config, "f"),
                          distribution_from_json(require(j, "g", ""), config, "g"), statistics,
                          config);
}

std::string serialize_state(const TwoParticleState& state) { return to_json(state).dump(); }

TwoParticleState parse_state(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
    const auto last_nl = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    const std::size_t column = last_nl == std::string_view::npos ? offset + 1 : offset - last_nl;
    throw Error(ErrorKind::InvalidParameter, "malformed state at line " + std::to_string(line) +
                                                 ", column " + std::to_string(column) + ": " +
                                                 e.what());
  }
  return state_from_json(j);
}

}  // namespace twomode
