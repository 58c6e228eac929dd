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

#include "twomode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "twomode/errors.hpp"
#include "twomode/interference.hpp"
#include "twomode/measures.hpp"
#include "twomode/random_states.hpp"

namespace twomode {

namespace {

constexpr double kRoundoff = 1e-12;
constexpr double kBoundTolerance = 1e-9;
constexpr double kPositionExtent = 3.0;

class Tally {
 public:
  explicit Tally(std::string name, double tol) : tol_(tol) { result_.name = std::move(name); }

  /// Records lhs <= rhs.
  void at_most(double lhs, double rhs) {
    const double excess = lhs - rhs;
    if (result_.evaluated == 0 || excess > result_.worst_excess) result_.worst_excess = excess;
    ++result_.evaluated;
    if (!(excess <= tol_)) ++result_.violations;
  }

  const CheckResult& result() const { return result_; }

 private:
  CheckResult result_;
  double tol_;
};

// Simulated sign bug: the fermion norm evaluated with the boson sign.
void inject_sign_fault(DetectionBreakdown& b, Statistics statistics) {
  if (statistics != Statistics::Fermion) return;
  b.inner_product = 1.0 + b.beta_fg * b.beta_fg;
  b.alpha_fg = b.beta_fg / b.inner_product;
  b.alpha_ff = b.alpha_gg = 1.0 / b.inner_product;
  b.p = 2.0 * b.alpha_fg * b.re_p_fg - b.alpha_gg * b.p_ff - b.alpha_ff * b.p_gg;
  b.p0 = std::abs(b.alpha_gg) * b.p_ff + std::abs(b.alpha_ff) * b.p_gg;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport run_verification(const VerifyOptions& options) {
  PhysicalConfig config;
  config.dimension = options.dimension;
  config.validate();
  const auto dim = static_cast<std::size_t>(config.dimension);
  std::mt19937_64 rng(options.seed);

  Tally norm_sign("fermion-norm-nonpositive", kRoundoff);
  Tally cauchy("beta-cauchy-schwarz", kRoundoff);
  Tally nonneg("probability-nonnegative", kRoundoff);
  Tally amp("amplitude-bound", kRoundoff);
  Tally ctilde("c-tilde-bound", kRoundoff);
  Tally crange("contrast-range", kRoundoff);
  Tally boson("boson-complementarity", kBoundTolerance);
  Tally quadratic("boson-quadratic-form", kBoundTolerance);
  Tally equality("boson-equality-at-f-equals-g", kBoundTolerance);
  Tally fermion("fermion-lower-bound", kBoundTolerance);
  Tally zero("zero-overlap-contrast", kRoundoff);

  const auto evaluate = [&](const TwoParticleState& state, const Vec& r) {
    const DetectionModel model(state, default_mode_grid(state, kPositionExtent));
    auto b = model.breakdown(r);
    if (options.inject_sign_fault) inject_sign_fault(b, state.statistics());
    return std::pair{model, b};
  };

  // Property battery over both statistics.
  for (std::size_t i = 0; i < options.families; ++i) {
    const auto fermions = random_state(rng, Statistics::Fermion, config);
    const Vec r = random_point(rng, dim, kPositionExtent);
    for (const auto& state : {fermions, fermions.with_statistics(Statistics::Boson)}) {
      const DetectionModel model(state, default_mode_grid(state, kPositionExtent));
      if (model.indeterminate()) continue;
      auto b = model.breakdown(r);
      if (options.inject_sign_fault) inject_sign_fault(b, state.statistics());
      if (state.statistics() == Statistics::Fermion) {
        norm_sign.at_most(b.inner_product, 0.0);
        cauchy.at_most(b.beta_fg, 1.0);
      }
      nonneg.at_most(-b.p, 0.0);
      amp.at_most(std::abs(2.0 * b.re_p_fg), b.p_ff + b.p_gg);
      if (b.p0 > kSingularEpsilon) {
        ctilde.at_most(std::abs(contrast_tilde(b)), 1.0);
        const double c = contrast(b, state.statistics());
        crange.at_most(-c, 0.0);
        crange.at_most(c, 2.0);
      }
    }
  }

  // Complementarity sweeps. Rejected draws (singular baseline, overlap above
  // the cap) are replaced so that each sweep evaluates the requested count.
  const std::size_t max_draws = 10 * options.boson_sweep + 10;
  for (std::size_t i = 0, draws = 0; i < options.boson_sweep && draws < max_draws; ++draws) {
    const auto state = random_state(rng, Statistics::Boson, config);
    const Vec r = random_point(rng, dim, kPositionExtent);
    const auto [model, b] = evaluate(state, r);
    if (b.p0 <= kSingularEpsilon) continue;
    ++i;
    const auto rep = complementarity_from(b, Statistics::Boson, model.distinguishability(), 0.0);
    boson.at_most(rep.d + rep.c, 2.0);
    const double d_star = std::sqrt(std::max(rep.d, 0.0));
    const double c_star = std::sqrt(std::max(rep.c, 0.0));
    quadratic.at_most(d_star * d_star + c_star * c_star, 2.0);
  }
  for (std::size_t i = 0, draws = 0; i < options.boson_sweep && draws < max_draws; ++draws) {
    const auto state = random_state(rng, Statistics::Fermion, config);
    const Vec r = random_point(rng, dim, kPositionExtent);
    const DetectionModel model(state, default_mode_grid(state, kPositionExtent));
    if (model.beta() > options.beta_cap) continue;
    auto b = model.breakdown(r);
    if (options.inject_sign_fault) inject_sign_fault(b, Statistics::Fermion);
    if (b.p0 <= kSingularEpsilon) continue;
    ++i;
    const auto rep = complementarity_from(b, Statistics::Fermion, model.distinguishability(), 0.0);
    fermion.at_most(rep.bound_value, rep.d + rep.c);
  }

  // Saturation at f = g for bosons.
  const std::size_t equal_cases = std::max<std::size_t>(1, options.families / 10);
  for (std::size_t i = 0; i < equal_cases; ++i) {
    const auto f = random_mixture(rng, config);
    const TwoParticleState state(f, f, Statistics::Boson, config);
    const auto [model, b] = evaluate(state, random_point(rng, dim, kPositionExtent));
    if (b.p0 <= kSingularEpsilon) continue;
    const auto rep = complementarity_from(b, Statistics::Boson, model.distinguishability(), 0.0);
    equality.at_most(std::abs(rep.d + rep.c - 2.0), 0.0);
  }

  // No common modes: C = 1 for both statistics.
  for (std::size_t i = 0; i < equal_cases; ++i) {
    const auto state = disjoint_state(rng, Statistics::Fermion, config);
    const Vec r = random_point(rng, dim, 1.0);
    for (const auto& s : {state, state.with_statistics(Statistics::Boson)}) {
      const DetectionModel model(s, std::get<GridSampled>(s.f().variant()).grid);
      auto b = model.breakdown(r);
      if (options.inject_sign_fault) inject_sign_fault(b, s.statistics());
      if (b.p0 <= kSingularEpsilon) continue;
      zero.at_most(std::abs(contrast(b, s.statistics()) - 1.0), 0.0);
    }
  }

  VerifyReport report;
  for (const Tally* t : {&norm_sign, &cauchy, &nonneg, &amp, &ctilde, &crange, &boson, &quadratic,
                         &equality, &fermion, &zero}) {
    report.checks.push_back(t->result());
  }
  return report;
}

}  // namespace twomode
