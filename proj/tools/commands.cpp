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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twomode/errors.hpp"
#include "twomode/gaussian.hpp"
#include "twomode/interference.hpp"
#include "twomode/measures.hpp"
#include "twomode/montecarlo.hpp"
#include "twomode/state_io.hpp"
#include "twomode/verify.hpp"

namespace twomode::cli {

namespace {

using nlohmann::json;

// Thrown for malformed invocations that CLI11 itself cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::InvalidParameter ? kUsageError : kNumericalError;
}

Vec to_vec(const std::vector<double>& v, const std::string& what) {
  if (v.empty() || v.size() > kMaxDimension) {
    throw UsageError(what + ": expected 1 to 3 comma-separated numbers");
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) throw UsageError(what + ": values must be finite");
    out[i] = v[i];
  }
  return out;
}

Vec parse_vec(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not a number");
    }
  }
  return to_vec(values, what);
}

Vec unit_vector(Vec u, const std::string& what) {
  const double n = u.norm();
  if (!(n > 0.0)) throw UsageError(what + ": direction must be non-zero");
  return u * (1.0 / n);
}

std::string vec_cell(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_number(v[i]);
  }
  return s + ")";
}

json vec_json(const Vec& v) { return json(std::vector<double>(v.begin(), v.end())); }

// Table with a single '#' metadata line and one header row.
class Table {
 public:
  Table(const std::string& command, const json& meta, std::vector<std::string> header)
      : width_(header.size()) {
    out_ << "# twomode " << command << ' ' << meta.dump() << '\n';
    row(header);
  }

  void row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::logic_error("table row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
      if (cells[i] == "non-finite") non_finite_ = true;
    }
    out_ << '\n';
  }

  bool saw_non_finite() const { return non_finite_; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  std::size_t width_;
  bool non_finite_ = false;
};

struct StateOptions {
  std::string file;
  std::string statistics = "boson";
  double hbar = 1.0;
  int dim = 1;
  double q = 1.0;
  std::vector<double> f_center;
  std::vector<double> g_center;
};

void add_state_options(CLI::App* sub, StateOptions& o) {
  auto* file = sub->add_option("--state", o.file, "State description file (JSON)");
  const std::vector<CLI::Option*> inline_opts{
      sub->add_option("--statistics", o.statistics, "boson or fermion")
          ->check(CLI::IsMember({"boson", "fermion"})),
      sub->add_option("--hbar", o.hbar, "Reduced Planck constant"),
      sub->add_option("--dim", o.dim, "Spatial dimension (1-3)")->check(CLI::Range(1, 3)),
      sub->add_option("--q", o.q, "Gaussian width Q of both modes"),
      sub->add_option("--f-center", o.f_center, "Centre of f, comma-separated")->delimiter(','),
      sub->add_option("--g-center", o.g_center, "Centre of g, comma-separated (default: f)")
          ->delimiter(','),
  };
  for (auto* opt : inline_opts) file->excludes(opt);
}

// Distributions are used as given; a state that is not normalized on its
// default grid only draws a warning.
void warn_if_unnormalized(const TwoParticleState& s, std::ostream& err) {
  const auto grid = default_mode_grid(s);
  for (const auto& [name, d] : {std::pair{"f", &s.f()}, std::pair{"g", &s.g()}}) {
    const auto report = validate_distribution(*d, grid);
    if (!report.ok) {
      err << "warning: " << name << " is not a normalized non-negative distribution (integral of "
          << name << "^2 = " << format_number(report.norm_value) << ")\n";
    }
  }
}

TwoParticleState build_state(const StateOptions& o, std::ostream& err) {
  if (!o.file.empty()) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw UsageError("cannot read state file '" + o.file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto state = parse_state(buffer.str());
    warn_if_unnormalized(state, err);
    return state;
  }
  PhysicalConfig config{o.hbar, o.dim};
  config.validate();
  const auto dim = static_cast<std::size_t>(o.dim);
  const Vec fc = o.f_center.empty() ? Vec(dim) : to_vec(o.f_center, "--f-center");
  const Vec gc = o.g_center.empty() ? fc : to_vec(o.g_center, "--g-center");
  return TwoParticleState(make_gaussian(fc, o.q, config), make_gaussian(gc, o.q, config),
                          parse_statistics(o.statistics), config);
}

double max_abs_component(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// ---------------------------------------------------------------- scan

const std::vector<std::string> kScanColumns{"P", "P0", "D", "C", "c_tilde", "bound", "slack"};

struct ScanOptions {
  StateOptions state;
  std::string sweep = "separation";
  std::vector<double> direction;
  std::vector<double> r;
  double start = 0.0;
  double stop = 1.0;
  int steps = 11;
  std::vector<std::string> columns;
  std::size_t nodes = 0;
};

std::string do_scan(const ScanOptions& o, bool& numerical_trouble, std::ostream& err) {
  const TwoParticleState base = build_state(o.state, err);
  const auto dim = static_cast<std::size_t>(base.config().dimension);
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
  if (!std::isfinite(o.start) || !std::isfinite(o.stop)) throw UsageError("range must be finite");

  const Vec u = unit_vector(o.direction.empty() ? Vec::unit(dim, 0) : to_vec(o.direction, "--direction"),
                            "--direction");
  const Vec r0 = o.r.empty() ? Vec(dim) : to_vec(o.r, "--r");
  if (u.size() != dim || r0.size() != dim) {
    throw UsageError("--direction and --r need " + std::to_string(dim) + " components");
  }
  const auto columns = o.columns.empty() ? kScanColumns : o.columns;
  for (const auto& c : columns) {
    if (std::find(kScanColumns.begin(), kScanColumns.end(), c) == kScanColumns.end()) {
      throw UsageError("--columns: unknown column '" + c + "'");
    }
  }

  json meta{{"state", to_json(base)}, {"sweep", o.sweep}, {"direction", vec_json(u)},
            {"r", vec_json(r0)}, {"start", o.start}, {"stop", o.stop}, {"steps", o.steps},
            {"columns", columns}, {"nodes", o.nodes}, {"seed", nullptr}};
  std::vector<std::string> header{o.sweep == "separation" ? "delta" : "t"};
  header.insert(header.end(), columns.begin(), columns.end());
  header.push_back("status");
  Table table("scan", meta, header);

  for (int i = 0; i < o.steps; ++i) {
    const double param = o.start + (o.stop - o.start) * i / (o.steps - 1);
    const bool separation = o.sweep == "separation";
    const TwoParticleState state = separation ? base.with_g(base.g().translated(u * param)) : base;
    const Vec r = separation ? r0 : r0 + u * param;

    const DetectionModel model(state, default_mode_grid(state, max_abs_component(r), o.nodes));
    std::map<std::string, std::string> cell;
    cell["D"] = format_number(model.distinguishability());
    std::string status = "ok";
    if (model.indeterminate()) {
      status = "indeterminate";
      for (const auto& c : kScanColumns) {
        if (c != "D") cell[c] = "indeterminate";
      }
    } else {
      const auto b = model.breakdown(r);
      cell["P"] = format_number(b.p);
      cell["P0"] = format_number(b.p0);
      const double bound = state.statistics() == Statistics::Boson ? 2.0 : 2.0 * (1.0 - b.beta_fg);
      cell["bound"] = format_number(bound);
      if (b.p0 <= kSingularEpsilon) {
        status = "singular";
        cell["C"] = cell["c_tilde"] = cell["slack"] = "singular";
      } else {
        const auto rep = complementarity_from(b, state.statistics(), model.distinguishability(), 0.0);
        cell["C"] = format_number(rep.c);
        cell["c_tilde"] = format_number(rep.c_tilde);
        cell["slack"] = format_number(rep.slack);
      }
      if (b.truncation_warning) {
        status = "truncation-warning";
        numerical_trouble = true;
      }
    }
    std::vector<std::string> row{format_number(param)};
    for (const auto& c : columns) row.push_back(cell[c]);
    row.push_back(status);
    table.row(row);
  }
  numerical_trouble = numerical_trouble || table.saw_non_finite();
  return table.str();
}

// -------------------------------------------------------------- verify

std::string do_verify(const VerifyOptions& v, bool& failed) {
  const VerifyReport report = run_verification(v);
  json meta{{"families", v.families}, {"sweep", v.boson_sweep}, {"seed", v.seed},
            {"dimension", v.dimension}, {"beta_cap", v.beta_cap},
            {"inject_sign_fault", v.inject_sign_fault}};
  Table table("verify", meta, {"check", "evaluated", "violations", "worst_excess", "status"});
  for (const auto& c : report.checks) {
    table.row({c.name, std::to_string(c.evaluated), std::to_string(c.violations),
               format_number(c.worst_excess), c.passed() ? "pass" : "FAIL"});
  }
  failed = !report.all_passed();
  return table.str();
}

// -------------------------------------------------------------- limits

struct LimitOptions {
  std::vector<double> r;
  double q = 1.0;
  double hbar = 1.0;
  std::vector<std::string> directions;
  std::vector<double> t_sequence{1e-1, 1e-2, 1e-3};
};

std::string do_limits(const LimitOptions& o) {
  const Vec r = to_vec(o.r, "--r");
  if (!(o.q > 0.0) || !(o.hbar > 0.0)) throw UsageError("--q and --hbar must be positive");
  std::vector<Vec> dirs;
  if (o.directions.empty()) {
    for (std::size_t i = 0; i < r.size(); ++i) dirs.push_back(Vec::unit(r.size(), i));
  }
  for (const auto& d : o.directions) {
    Vec u = unit_vector(parse_vec(d, "--direction"), "--direction");
    if (u.size() != r.size()) throw UsageError("--direction must match the dimension of --r");
    dirs.push_back(u);
  }
  for (double t : o.t_sequence) {
    if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("--t values must be positive");
  }

  json dir_meta = json::array();
  for (const auto& u : dirs) dir_meta.push_back(vec_json(u));
  json meta{{"r", vec_json(r)}, {"q", o.q}, {"hbar", o.hbar}, {"directions", dir_meta},
            {"t", o.t_sequence}, {"seed", nullptr}};
  Table table("limits", meta, {"direction", "t", "ratio", "limit", "residual", "residual_over_t2"});
  for (const auto& u : dirs) {
    const double limit = lhopital_limit(u, r, o.q, o.hbar);
    for (double t : o.t_sequence) {
      const double step = t * o.q;
      const double ratio = fermion_ratio(u * step, r, o.q, o.hbar);
      const double residual = std::abs(ratio - limit);
      table.row({vec_cell(u), format_number(t), format_number(ratio), format_number(limit),
                 format_number(residual), format_number(residual / (step * step))});
    }
  }
  return table.str();
}

// ------------------------------------------------------------ simulate

struct SimulateOptions {
  StateOptions state;
  std::vector<double> bin_center;
  std::vector<double> bin_half_width{0.05};
  std::size_t n = 1000000;
  std::uint64_t seed = 1;
  std::size_t position_nodes = 0;
  std::size_t mode_nodes = 0;
};

std::string do_simulate(const SimulateOptions& o, std::ostream& err) {
  const TwoParticleState state = build_state(o.state, err);
  const auto dim = static_cast<std::size_t>(state.config().dimension);
  const Vec centre = o.bin_center.empty() ? Vec(dim) : to_vec(o.bin_center, "--bin-center");
  Vec half = to_vec(o.bin_half_width, "--bin-half-width");
  if (half.size() == 1 && dim > 1) half = Vec(dim, half[0]);
  if (centre.size() != dim || half.size() != dim) {
    throw UsageError("bin centre and half-width need " + std::to_string(dim) + " components");
  }
  const DetectorBin bin{centre, half};
  bin.validate();

  QuadratureGrid position_grid = default_position_grid(state, o.position_nodes);
  if (o.position_nodes == 0) {
    // Cells well below the bin size keep the piecewise-constant density
    // from biasing the bin count.
    double finest = half[0];
    for (double h : half) finest = std::min(finest, h);
    const double span = position_grid.axis(0).width();
    const auto wanted = static_cast<std::size_t>(std::ceil(span / (finest / 5.0))) + 1;
    const std::size_t cap = dim == 1 ? 20001 : (dim == 2 ? 801 : 161);
    position_grid = position_grid.refined(std::clamp(wanted, position_grid.nodes_per_axis(),
                                                     std::max(cap, position_grid.nodes_per_axis())));
  }
  const double reach = position_grid.axis(0).upper;
  const QuadratureGrid mode_grid = default_mode_grid(state, reach, o.mode_nodes);

  const auto est = estimate_contrast(state, bin, o.n, o.seed, position_grid, mode_grid);
  const DetectionModel model(state, mode_grid);
  const double analytic = contrast(model.breakdown(bin.center), state.statistics());
  const double z = (est.contrast - analytic) / est.standard_error;

  json meta{{"state", to_json(state)}, {"bin_center", vec_json(centre)},
            {"bin_half_width", vec_json(half)}, {"n_per_run", o.n}, {"seed", o.seed},
            {"position_nodes", position_grid.nodes_per_axis()},
            {"mode_nodes", mode_grid.nodes_per_axis()}};
  Table table("simulate", meta,
              {"C_hat", "sigma", "C_analytic", "z", "n_per_run", "count_pair", "count_f", "count_g"});
  table.row({format_number(est.contrast), format_number(est.standard_error), format_number(analytic),
             format_number(z), std::to_string(o.n), std::to_string(est.pair_run.in_bin_count),
             std::to_string(est.f_run.in_bin_count), std::to_string(est.g_run.in_bin_count)});
  return table.str();
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "non-finite";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Multimode two-particle interference: detection probability, "
               "distinguishability and contrast",
               "twomode"};
  app.require_subcommand(1);
  std::string out_path;

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Sweep a separation or detector position");
  add_state_options(scan_cmd, scan.state);
  scan_cmd->add_option("--sweep", scan.sweep, "separation | position")
      ->check(CLI::IsMember({"separation", "position"}));
  scan_cmd->add_option("--direction", scan.direction, "Sweep direction")->delimiter(',');
  scan_cmd->add_option("--r", scan.r, "Detector position (or ray origin)")->delimiter(',');
  scan_cmd->add_option("--start", scan.start, "First parameter value");
  scan_cmd->add_option("--stop", scan.stop, "Last parameter value");
  scan_cmd->add_option("--steps", scan.steps, "Number of rows (>= 2)");
  scan_cmd->add_option("--columns", scan.columns, "Subset of P,P0,D,C,c_tilde,bound,slack")
      ->delimiter(',');
  scan_cmd->add_option("--nodes", scan.nodes, "Mode-grid nodes per axis (0: automatic)");
  scan_cmd->add_option("--out", out_path, "Write the table here instead of stdout");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized inequality battery");
  verify_cmd->add_option("--families", verify.families, "Random states for the property checks");
  verify_cmd->add_option("--sweep", verify.boson_sweep, "Random states per complementarity sweep");
  verify_cmd->add_option("--seed", verify.seed, "Master seed");
  verify_cmd->add_option("--dim", verify.dimension, "Spatial dimension")->check(CLI::Range(1, 3));
  verify_cmd->add_option("--beta-cap", verify.beta_cap, "Largest overlap in the fermion sweep")
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_flag("--inject-sign-fault", verify.inject_sign_fault)->group("");
  verify_cmd->add_option("--out", out_path, "Write the table here instead of stdout");

  LimitOptions limits;
  auto* limits_cmd = app.add_subcommand("limits", "Directional limits of the fermion ratio");
  limits_cmd->add_option("--r", limits.r, "Detector position")->delimiter(',')->required();
  limits_cmd->add_option("--q", limits.q, "Gaussian width Q");
  limits_cmd->add_option("--hbar", limits.hbar, "Reduced Planck constant");
  limits_cmd->add_option("--direction", limits.directions,
                         "Approach direction, comma-separated (repeatable; normalized)");
  limits_cmd->add_option("--t", limits.t_sequence, "Step sizes in units of Q")->delimiter(',');
  limits_cmd->add_option("--out", out_path, "Write the table here instead of stdout");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the contrast");
  add_state_options(sim_cmd, sim.state);
  sim_cmd->add_option("--bin-center", sim.bin_center, "Detector bin centre")->delimiter(',');
  sim_cmd->add_option("--bin-half-width", sim.bin_half_width, "Bin half-width(s)")->delimiter(',');
  sim_cmd->add_option("--n", sim.n, "Events per run")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--position-nodes", sim.position_nodes, "Position-grid nodes per axis");
  sim_cmd->add_option("--mode-nodes", sim.mode_nodes, "Mode-grid nodes per axis");
  sim_cmd->add_option("--out", out_path, "Write the table here instead of stdout");

  CommandResult result;
  std::vector<std::string> argv_store{"twomode"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    result.output = out.str();
    result.diagnostics = err.str();
    return result;
  }
  result.out_path = out_path;

  try {
    if (*scan_cmd) {
      bool trouble = false;
      result.output = do_scan(scan, trouble, err);
      if (trouble) {
        result.exit_code = kNumericalError;
        err << "warning: some rows are flagged (truncation or non-finite values)\n";
      }
    } else if (*verify_cmd) {
      bool failed = false;
      result.output = do_verify(verify, failed);
      if (failed) {
        result.exit_code = kInvariantViolation;
        err << "error: invariant violated:";
        for (const auto& line : {result.output}) {
          std::istringstream rows(line);
          std::string row;
          while (std::getline(rows, row)) {
            if (row.size() >= 4 && row.compare(row.size() - 4, 4, "FAIL") == 0) {
              err << ' ' << row.substr(0, row.find(','));
            }
          }
        }
        err << '\n';
      }
    } else if (*limits_cmd) {
      result.output = do_limits(limits);
    } else if (*sim_cmd) {
      result.output = do_simulate(sim, err);
    }
  } catch (const UsageError& e) {
    result.exit_code = kUsageError;
    err << "usage error: " << e.what() << '\n';
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    err << "error: " << e.what() << '\n';
  }
  result.diagnostics = err.str();
  return result;
}

}  // namespace twomode::cli
