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

#include "twomode/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct BinDensities {
  double p;
  double p_ff;
  double p_gg;
};

void check_variation(double centre, double corner, const char* what) {
  if (centre <= 0.0) return;
  if (std::abs(corner - centre) > kMaxBinVariation * centre) {
    throw Error(ErrorKind::InvalidParameter,
                std::string("detector bin too large: ") + what + " varies by more than 5% across it");
  }
}

}  // namespace

void DetectorBin::validate() const {
  if (center.size() != half_width.size()) {
    throw Error(ErrorKind::InvalidParameter, "bin centre and half-width differ in dimension");
  }
  for (double h : half_width) {
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw Error(ErrorKind::InvalidParameter, "bin half-widths must be positive");
    }
  }
}

double DetectorBin::volume() const {
  double v = 1.0;
  for (double h : half_width) v *= 2.0 * h;
  return v;
}

bool DetectorBin::contains(const Vec& r) const {
  for (std::size_t i = 0; i < center.size(); ++i) {
    if (std::abs(r[i] - center[i]) > half_width[i]) return false;
  }
  return true;
}

Box DetectorBin::box() const { return {center - half_width, center + half_width}; }

PositionSampler::PositionSampler(const DensitySource& source, const QuadratureGrid& position_grid,
                                 const QuadratureGrid& mode_grid)
    : grid_(position_grid), mass_(0.0) {
  std::vector<double> density(grid_.size());
  if (const auto* pair = std::get_if<TwoParticleSource>(&source)) {
    const DetectionModel model(pair->state, mode_grid);
    for (std::size_t i = 0; i < density.size(); ++i) {
      density[i] = 0.5 * model.breakdown(grid_.node(i)).p;
    }
    mass_ = 2.0;
  } else {
    const auto& single = std::get<OneParticleSource>(source);
    const DetectionModel model(
        TwoParticleState(single.f, single.f, Statistics::Boson, single.config), mode_grid);
    for (std::size_t i = 0; i < density.size(); ++i) density[i] = model.density_f(grid_.node(i));
    mass_ = 1.0;
  }

  const double peak = *std::max_element(density.begin(), density.end());
  const auto w = grid_.weights();
  cumulative_.resize(density.size());
  double running = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) {
    double rho = density[i];
    if (rho < 0.0) {
      if (rho < -1e-12 * std::max(peak, 0.0)) {
        throw Error(ErrorKind::DegenerateDensity, "density is negative on the position grid");
      }
      rho = 0.0;
    }
    running += w[i] * rho;
    cumulative_[i] = running;
  }
  if (!(running > 0.0)) {
    throw Error(ErrorKind::DegenerateDensity, "density integrates to zero on the position grid");
  }
}

template <class Visit>
void PositionSampler::draw(std::size_t n, std::uint64_t seed, Visit&& visit) const {
  if (n == 0) throw Error(ErrorKind::InvalidParameter, "sample count must be at least 1");
  std::mt19937_64 rng(seed);
  const double total = cumulative_.back();
  const std::size_t dim = grid_.dimension();
  for (std::size_t k = 0; k < n; ++k) {
    const double u = uniform01(rng) * total;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto cell_index = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cumulative_.begin(),
                                 static_cast<std::ptrdiff_t>(cumulative_.size()) - 1));
    const Box cell = grid_.cell(cell_index);
    Vec r(dim);
    for (std::size_t ax = 0; ax < dim; ++ax) {
      r[ax] = cell.lower[ax] + uniform01(rng) * (cell.upper[ax] - cell.lower[ax]);
    }
    visit(r);
  }
}

std::vector<Vec> PositionSampler::sample(std::size_t n, std::uint64_t seed) const {
  std::vector<Vec> out;
  out.reserve(n);
  draw(n, seed, [&](const Vec& r) { out.push_back(r); });
  return out;
}

RunResult PositionSampler::count(const DetectorBin& bin, std::size_t n, std::uint64_t seed) const {
  bin.validate();
  if (bin.center.size() != grid_.dimension()) {
    throw Error(ErrorKind::InvalidParameter, "bin dimension does not match the position grid");
  }
  RunResult res;
  res.n_events = n;
  res.seed = seed;
  draw(n, seed, [&](const Vec& r) {
    if (bin.contains(r)) ++res.in_bin_count;
  });
  const double p = static_cast<double>(res.in_bin_count) / static_cast<double>(n);
  const double scale = mass_ / bin.volume();
  res.density_estimate = p * scale;
  res.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(n)) * scale;
  return res;
}

std::vector<Vec> sample_positions(const DensitySource& source, const QuadratureGrid& position_grid,
                                  const QuadratureGrid& mode_grid, std::size_t n,
                                  std::uint64_t seed) {
  return PositionSampler(source, position_grid, mode_grid).sample(n, seed);
}

std::uint64_t run_seed(std::uint64_t master, unsigned index) {
  return master + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index);
}

ContrastEstimate estimate_contrast(const TwoParticleState& state, const DetectorBin& bin,
                                   std::size_t n_per_run, std::uint64_t seed,
                                   const QuadratureGrid& position_grid,
                                   const QuadratureGrid& mode_grid) {
  bin.validate();
  if (bin.center.size() != position_grid.dimension()) {
    throw Error(ErrorKind::InvalidParameter, "bin dimension does not match the position grid");
  }
  if (!position_grid.bounds().contains(bin.box())) {
    throw Error(ErrorKind::InvalidParameter, "detector bin extends outside the position grid");
  }

  const DetectionModel model(state, mode_grid);
  const auto densities = [&](const Vec& r) {
    const auto b = model.breakdown(r);
    return BinDensities{b.p, b.p_ff, b.p_gg};
  };
  const BinDensities centre = densities(bin.center);
  const std::size_t dim = bin.center.size();
  for (std::size_t corner = 0; corner < (std::size_t{1} << dim); ++corner) {
    Vec r = bin.center;
    for (std::size_t ax = 0; ax < dim; ++ax) {
      r[ax] += ((corner >> ax) & 1U) ? bin.half_width[ax] : -bin.half_width[ax];
    }
    const BinDensities c = densities(r);
    check_variation(centre.p, c.p, "P");
    check_variation(centre.p_ff, c.p_ff, "P_ff");
    check_variation(centre.p_gg, c.p_gg, "P_gg");
  }

  ContrastEstimate est;
  est.pair_run = PositionSampler(TwoParticleSource{state}, position_grid, mode_grid)
                     .count(bin, n_per_run, run_seed(seed, 0));
  est.f_run = PositionSampler(OneParticleSource{state.f(), state.config()}, position_grid, mode_grid)
                  .count(bin, n_per_run, run_seed(seed, 1));
  est.g_run = PositionSampler(OneParticleSource{state.g(), state.config()}, position_grid, mode_grid)
                  .count(bin, n_per_run, run_seed(seed, 2));
  if (est.f_run.in_bin_count == 0 || est.g_run.in_bin_count == 0) {
    throw Error(ErrorKind::InsufficientStatistics,
                "a single-source run recorded no events in the detector bin");
  }

  // |alpha_ff| = |alpha_gg| = 1 / |<I|I>|, known from the preparation.
  const double alpha = 1.0 / std::abs(model.inner_product());
  const double a = est.pair_run.density_estimate;
  const double b = alpha * (est.f_run.density_estimate + est.g_run.density_estimate);
  const double sa = est.pair_run.standard_error;
  const double sb = alpha * std::hypot(est.f_run.standard_error, est.g_run.standard_error);
  est.contrast = a / b;
  est.standard_error = std::hypot(sa / b, a * sb / (b * b));
  return est;
}

}  // namespace twomode
