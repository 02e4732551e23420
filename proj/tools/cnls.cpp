// Command-line front end: one subcommand per experiment, each writing
// <name>.csv (and optionally <name>.svg) into $CNLS_OUTPUT_DIR.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cnls/errors.hpp"
#include "cnls/experiments.hpp"
#include "cnls/spectral.hpp"
#include "cnls/trajectory_io.hpp"
#include "cnls/version.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

fs::path output_dir() {
  const char* env = std::getenv("CNLS_OUTPUT_DIR");
  fs::path dir = env && *env ? fs::path(env) : fs::current_path();
  fs::create_directories(dir);
  return dir;
}

cnls::Complex parse_complex(const std::string& text) {
  const auto modes = cnls::parse_modes("0:" + text);
  if (modes.size() != 1) throw cnls::ConfigError("expected re or re:im, got '" + text + "'");
  return modes.front().second;
}

// Writes the report and prints one line per verdict; returns the exit code.
int emit(const cnls::ExperimentReport& report, const std::string& name, bool svg) {
  const fs::path dir = output_dir();
  const fs::path csv = dir / (name + ".csv");
  cnls::write_csv(csv, report, cnls::utc_timestamp());
  std::cout << "wrote " << csv.string() << "\n";
  if (svg) {
    const std::string chart = cnls::report_chart(report);
    if (chart.empty()) {
      std::cout << "no chart for " << report.name() << "\n";
    } else {
      const fs::path path = dir / (name + ".svg");
      std::ofstream(path) << chart;
      std::cout << "wrote " << path.string() << "\n";
    }
  }
  for (const auto& v : report.verdicts()) {
    std::cout << (v.pass ? "PASS " : "FAIL ") << v.criterion << ": " << v.measured << " " << v.relation
              << " " << v.threshold << "\n";
  }
  if (const auto selected = report.get("selected_limit"); !selected.empty()) {
    std::cout << "selected limit: " << selected << "\n";
  }
  return report.all_pass() ? EXIT_SUCCESS : kExitFail;
}

struct InitialDataFlags {
  std::string modes;
  cnls::InitialData data;

  void add(CLI::App* app) {
    app->add_option("--modes", modes, "Initial modes as k:re[:im],...");
    app->add_option("--random-count", data.random_count, "Draw this many random modes instead");
    app->add_option("--random-band", data.random_band, "Random modes lie in |k| <= band");
    app->add_option("--random-amplitude", data.random_amplitude, "Scale of random coefficients");
    app->add_option("--seed", data.seed, "Seed for random initial data");
  }
  cnls::InitialData resolve() const {
    cnls::InitialData out = data;
    if (!modes.empty()) out.modes = cnls::parse_modes(modes);
    return out;
  }
};

struct WeakLimitFlags {
  std::string beta1 = "1";
  std::string beta2 = "1";
  std::optional<int> n_modes;
  std::optional<double> dt;
  bool serial = false;
  cnls::WeakLimitConfig config;

  void add(CLI::App* app) {
    app->add_option("--beta1", beta1, "Constant mode, re[:im]")->capture_default_str();
    app->add_option("--beta2", beta2, "Oscillating mode, re[:im]")->capture_default_str();
    app->add_option("--gamma", config.gamma, "Nonlinearity sign and strength")->capture_default_str();
    app->add_option("--t-eval", config.t_eval, "Evaluation times")->capture_default_str();
    app->add_option("--n-sweep", config.n_sweep, "Increasing list of oscillation modes")->capture_default_str();
    app->add_option("--probe-band", config.probe_band, "Pair against e^{ijx}, |j| <= K")->capture_default_str();
    app->add_option("--n-modes", n_modes, "Grid size (default: power of two >= 8 max n)");
    app->add_option("--dt", dt, "Fixed time step for every n");
    app->add_option("--base-dt", config.base_dt, "Step for n <= resolved mode")->capture_default_str();
    app->add_option("--resolved-mode", config.resolved_mode, "Above this n the step shrinks as 1/n^2")
        ->capture_default_str();
    app->add_flag("--serial", serial, "Run the sweep on one thread");
  }
  cnls::WeakLimitConfig resolve() const {
    cnls::WeakLimitConfig out = config;
    out.beta1 = parse_complex(beta1);
    out.beta2 = parse_complex(beta2);
    out.n_modes = n_modes;
    out.dt = dt;
    out.parallel = !serial;
    return out;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic cubic NLS: solver, weak-limit experiments and estimate surveys"};
  app.set_version_flag("--version", std::string(cnls::kVersion));
  app.set_config("--config", "", "Key-value config file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  std::string name;
  bool svg = false;
  app.add_option("--name", name, "Output base name (default: the report name)");
  app.add_flag("--svg", svg, "Also write an SVG chart when the report has one");

  // solve
  auto* solve = app.add_subcommand("solve", "Integrate one equation and write the trajectory");
  InitialDataFlags solve_data;
  solve_data.add(solve);
  cnls::SolverConfig solver;
  std::string equation = "cubic-nls";
  int n_modes = 128;
  double theta_sq = 0.0;
  solve->add_option("--equation", equation, "cubic-nls or limit-pde")->capture_default_str();
  solve->add_option("--gamma", solver.gamma)->capture_default_str();
  solve->add_option("--theta-sq", theta_sq, "Limit equation: alpha^2 = ||u0||^2 + 2 pi theta_sq")
      ->capture_default_str();
  solve->add_option("--dt", solver.dt)->capture_default_str();
  solve->add_option("--t-end", solver.t_end, "Negative integrates backwards")->capture_default_str();
  solve->add_option("--n-modes", n_modes)->capture_default_str();
  solve->add_option("--record-every", solver.record_every)->capture_default_str();

  // weak-limit and discontinuity
  auto* weak = app.add_subcommand("weak-limit", "Mode-0 pairings of u_n(t) against both limit formulas");
  WeakLimitFlags weak_flags;
  weak_flags.add(weak);
  auto* disc = app.add_subcommand("discontinuity", "H^s distances of data and solutions along the sweep");
  WeakLimitFlags disc_flags;
  disc_flags.add(disc);
  double sobolev = -0.5;
  disc->add_option("--s", sobolev, "Negative Sobolev index")->capture_default_str();

  // gauge-check
  auto* gauge = app.add_subcommand("gauge-check", "Gauged limit equation vs cubic NLS");
  InitialDataFlags gauge_data;
  gauge_data.data.random_count = 5;
  gauge_data.add(gauge);
  cnls::GaugeCheckConfig gauge_config;
  gauge->add_option("--gamma", gauge_config.gamma)->capture_default_str();
  gauge->add_option("--theta-sq", gauge_config.theta_sq)->capture_default_str();
  gauge->add_option("--t-end", gauge_config.t_end)->capture_default_str();
  gauge->add_option("--n-modes", gauge_config.n_modes)->capture_default_str();
  gauge->add_option("--dt", gauge_config.dt)->capture_default_str();
  gauge->add_option("--record-every", gauge_config.record_every)->capture_default_str();

  // survey
  auto* survey = app.add_subcommand("survey", "Estimate and identity surveys");
  std::string kind;
  cnls::SurveyConfig survey_config;
  bool survey_serial = false;
  std::string trajectory;
  survey->add_option("kind", kind,
                     "l4, lambda, zygmund, resonance, decomposition, exact-solution, conservation, "
                     "convergence or spacetime")
      ->required();
  survey->add_option("--seed", survey_config.seed)->capture_default_str();
  survey->add_option("--sizes", survey_config.sizes, "Lattice or grid sizes; bound for resonance");
  survey->add_option("--samples", survey_config.samples, "Samples per size (0: kind default)");
  survey->add_option("--trajectory", trajectory, "Trajectory file for the spacetime survey");
  survey->add_option("--time-window", survey_config.time_window, "Spacetime survey window")
      ->capture_default_str();
  survey->add_flag("--serial", survey_serial, "Evaluate samples on one thread");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      solver.equation = cnls::parse_equation(equation);
      solver.grid = cnls::GridSpec(n_modes);
      const cnls::InitialData data = solve_data.resolve();
      const cnls::PeriodicField u0 = data.build(solver.grid);
      const double mass = cnls::l2_norm(u0);
      solver.alpha_sq = mass * mass + cnls::kTwoPi * theta_sq;
      const cnls::Trajectory traj = cnls::solve(u0, solver);
      const std::string base = name.empty() ? "solve" : name;
      const fs::path traj_path = output_dir() / (base + ".traj");
      cnls::write_trajectory(traj_path, traj);
      std::cout << "wrote " << traj_path.string() << "\n";

      cnls::ExperimentReport report("solve");
      report.set("code_version", cnls::kVersion);
      report.set("u0", data.describe());
      report.set("equation", cnls::to_string(solver.equation));
      report.set("gamma", solver.gamma);
      report.set("alpha_sq", solver.alpha_sq);
      report.set("dt", solver.dt);
      report.set("t_end", solver.t_end);
      report.set("n_modes", std::to_string(n_modes));
      report.set_columns({"t", "l2_norm", "rel_drift"});
      double drift = 0.0;
      for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const double norm = cnls::l2_norm(traj.states[i]);
        const double rel = mass > 0 ? std::abs(norm - mass) / mass : 0.0;
        drift = std::max(drift, rel);
        report.add_row({traj.times[i], norm, rel});
      }
      report.add_verdict(cnls::make_verdict("AC4", drift, "<=", 1e-7));
      return emit(report, base, svg);
    }
    if (weak->parsed()) {
      const auto report = cnls::run_weak_limit(weak_flags.resolve());
      return emit(report, name.empty() ? report.name() : name, svg);
    }
    if (disc->parsed()) {
      const auto report = cnls::run_discontinuity(disc_flags.resolve(), cnls::SobolevIndex{sobolev});
      return emit(report, name.empty() ? report.name() : name, svg);
    }
    if (gauge->parsed()) {
      gauge_config.u0 = gauge_data.resolve();
      const auto report = cnls::run_gauge_check(gauge_config);
      return emit(report, name.empty() ? report.name() : name, svg);
    }
    if (survey->parsed()) {
      survey_config.kind = cnls::parse_survey_kind(kind);
      survey_config.parallel = !survey_serial;
      survey_config.trajectory = trajectory;
      const auto report = cnls::run_surveys(survey_config);
      return emit(report, name.empty() ? report.name() : name, svg);
    }
  } catch (const cnls::InstabilityError& e) {
    std::cerr << "cnls: unstable at step " << e.step() << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "cnls: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
