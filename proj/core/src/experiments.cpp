#include "cnls/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cnls/errors.hpp"
#include "cnls/ensemble.hpp"
#include "cnls/spectral.hpp"
#include "cnls/svg_chart.hpp"
#include "cnls/version.hpp"
#include "number_format.hpp"
#include "parallel.hpp"

namespace cnls {
namespace {

// Gaps below this are indistinguishable from time-stepping error.
constexpr double kSolverFloor = 1e-9;

std::string format_complex(Complex z) {
  return detail::format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") +
         detail::format_double(z.imag()) + "i";
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + detail::format_double(xs[i]);
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

PeriodicField constant_field(GridSpec grid, Complex value) {
  return PeriodicField::from_modes(grid, {{0, value}});
}

// Exact solution from the constant datum beta1.
Complex constant_mode_solution(const WeakLimitConfig& config, double t) {
  return config.beta1 * std::polar(1.0, config.gamma * std::norm(config.beta1) * t);
}

void echo_weak_limit(ExperimentReport& report, const WeakLimitConfig& config) {
  report.set("code_version", kVersion);
  report.set("beta1", format_complex(config.beta1));
  report.set("beta2", format_complex(config.beta2));
  report.set("gamma", config.gamma);
  report.set("t_eval", join(config.t_eval));
  report.set("n_sweep", join(config.n_sweep));
  report.set("probe_band", std::to_string(config.probe_band));
  report.set("n_modes", std::to_string(config.grid().size()));
  std::vector<double> steps;
  for (int n : config.n_sweep) steps.push_back(config.dt_for(n));
  report.set("dt_per_n", join(steps));
  report.set("adherence_alpha_sq", config.adherence_alpha_sq());
  report.set("weak_probe",
             "pairings with e^{ijx} for |j| <= probe_band stand in for all smooth test functions");
}

}  // namespace

PeriodicField InitialData::build(GridSpec grid) const {
  if (!modes.empty()) return PeriodicField::from_modes(grid, std::span(modes));
  if (random_count > 0) return random_sparse_field(grid, random_count, random_band, random_amplitude, seed);
  return PeriodicField(grid);
}

std::string InitialData::describe() const {
  if (!modes.empty()) {
    std::string out;
    for (const auto& [k, c] : modes) {
      out += (out.empty() ? "" : ",") + std::to_string(k) + ":" + detail::format_double(c.real()) + ":" +
             detail::format_double(c.imag());
    }
    return out;
  }
  if (random_count > 0) {
    return "random count=" + std::to_string(random_count) + " band=" + std::to_string(random_band) +
           " amplitude=" + detail::format_double(random_amplitude) + " seed=" + std::to_string(seed);
  }
  return "zero";
}

std::vector<std::pair<int, Complex>> parse_modes(const std::string& text) {
  std::vector<std::pair<int, Complex>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::string> parts;
    std::istringstream fields(item);
    std::string part;
    while (std::getline(fields, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) {
      throw ConfigError("mode '" + item + "' must look like k:re or k:re:im");
    }
    try {
      const int k = std::stoi(parts[0]);
      const double re = detail::parse_double(parts[1]);
      const double im = parts.size() == 3 ? detail::parse_double(parts[2]) : 0.0;
      out.emplace_back(k, Complex(re, im));
    } catch (const std::exception&) {
      throw ConfigError("mode '" + item + "' must look like k:re or k:re:im");
    }
  }
  return out;
}

std::vector<PeriodicField> evolve_to_times(const PeriodicField& u0, SolverConfig config,
                                           const std::vector<double>& times, double max_dt) {
  max_dt = std::min(max_dt, kMaxTimeStep);
  std::vector<PeriodicField> out;
  out.reserve(times.size());
  PeriodicField state = u0;
  double now = 0.0;
  for (double target : times) {
    const double span = target - now;
    if (span != 0.0) {
      const long steps = std::max(1L, static_cast<long>(std::ceil(std::abs(span) / max_dt - 1e-9)));
      config.dt = std::abs(span) / static_cast<double>(steps);
      config.t_end = span;
      config.record_every = static_cast<int>(steps);
      state = solve(state, config).final_state();
      config.require_quarter_band = false;
      now = target;
    }
    out.push_back(state);
  }
  return out;
}

void WeakLimitConfig::validate() const {
  if (!(gamma != 0.0)) throw ConfigError("gamma must be nonzero");
  if (n_sweep.empty()) throw ConfigError("n_sweep is empty");
  for (std::size_t i = 0; i < n_sweep.size(); ++i) {
    if (n_sweep[i] < 1) throw ConfigError("n_sweep entries must be positive");
    if (i > 0 && n_sweep[i] <= n_sweep[i - 1]) throw ConfigError("n_sweep must be increasing");
  }
  if (t_eval.empty()) throw ConfigError("t_eval is empty");
  for (double t : t_eval) {
    if (!std::isfinite(t)) throw ConfigError("t_eval entries must be finite");
  }
  const int n_max = n_sweep.back();
  if (n_max > grid().size() / 4) {
    throw ConfigError("max(n_sweep) = " + std::to_string(n_max) + " exceeds N/4 = " +
                      std::to_string(grid().size() / 4));
  }
  if (probe_band < 0 || 2 * probe_band > n_max) throw ConfigError("probe_band must lie in [0, max(n)/2]");
  if (dt && !(*dt > 0.0 && *dt <= kMaxTimeStep)) throw ConfigError("dt override must lie in (0, 0.01]");
  if (!(base_dt > 0.0 && base_dt <= kMaxTimeStep)) throw ConfigError("base_dt must lie in (0, 0.01]");
  if (resolved_mode < 1) throw ConfigError("resolved_mode must be positive");
}

GridSpec WeakLimitConfig::grid() const {
  if (n_modes) return GridSpec(*n_modes);
  const int n_max = n_sweep.empty() ? 1 : n_sweep.back();
  int n = 4;
  while (n < 8 * n_max) n *= 2;
  return GridSpec(n);
}

double WeakLimitConfig::dt_for(int n) const {
  if (dt) return *dt;
  if (n <= resolved_mode) return base_dt;
  const double ratio = static_cast<double>(resolved_mode) / n;
  return base_dt * ratio * ratio;
}

PeriodicField WeakLimitConfig::initial(int n) const {
  return PeriodicField::from_modes(grid(), {{0, beta1}, {n, beta2}});
}

double WeakLimitConfig::adherence_alpha_sq() const {
  return kTwoPi * (std::norm(beta1) + std::norm(beta2));
}

Complex limit_candidate_a(const WeakLimitConfig& config, double t) {
  const double rate = config.gamma * (std::norm(config.beta1) + 2.0 * std::norm(config.beta2));
  return config.beta1 * std::polar(1.0, rate * t);
}

Complex limit_candidate_b(const WeakLimitConfig& config, double t) {
  const double rate = 2.0 * config.gamma * (std::norm(config.beta1) + std::norm(config.beta2));
  return config.beta1 * std::polar(1.0, rate * t);
}

ModeSweep run_mode_sweep(const WeakLimitConfig& config) {
  config.validate();
  ModeSweep sweep;
  sweep.n = config.n_sweep;
  sweep.times = config.t_eval;

  // Evolve through the requested times in increasing |t| order on each side of 0.
  std::vector<std::size_t> order(config.t_eval.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> forward, backward;
  for (std::size_t i : order) (config.t_eval[i] >= 0.0 ? forward : backward).push_back(i);
  auto by_abs = [&](std::size_t a, std::size_t b) {
    return std::abs(config.t_eval[a]) < std::abs(config.t_eval[b]);
  };
  std::sort(forward.begin(), forward.end(), by_abs);
  std::sort(backward.begin(), backward.end(), by_abs);

  sweep.states = detail::parallel_map(
      config.n_sweep.size(),
      [&](std::size_t member) {
        const int n = config.n_sweep[member];
        SolverConfig solver;
        solver.equation = Equation::CubicNLS;
        solver.gamma = config.gamma;
        solver.grid = config.grid();
        const PeriodicField u0 = config.initial(n);
        std::vector<std::optional<PeriodicField>> states(config.t_eval.size());
        for (const auto* side : {&forward, &backward}) {
          std::vector<double> times;
          for (std::size_t i : *side) times.push_back(config.t_eval[i]);
          try {
            auto results = evolve_to_times(u0, solver, times, config.dt_for(n));
            for (std::size_t j = 0; j < side->size(); ++j) states[(*side)[j]] = std::move(results[j]);
          } catch (const InstabilityError& e) {
            throw InstabilityError(e.step(), std::string("n = ") + std::to_string(n) + ": " + e.what());
          }
        }
        std::vector<PeriodicField> out;
        for (auto& s : states) out.push_back(std::move(*s));
        return out;
      },
      config.parallel);
  return sweep;
}

ExperimentReport weak_limit_report(const WeakLimitConfig& config, const ModeSweep& sweep) {
  ExperimentReport report("weak-limit");
  echo_weak_limit(report, config);

  std::vector<std::string> columns{"n", "t", "dt", "gap_A", "gap_B"};
  for (int j = -config.probe_band; j <= config.probe_band; ++j) {
    columns.push_back("pair_re(" + std::to_string(j) + ")");
    columns.push_back("pair_im(" + std::to_string(j) + ")");
  }
  report.set_columns(columns);

  // gap[t][n]
  std::vector<std::vector<double>> gap_a(sweep.times.size()), gap_b(sweep.times.size());
  for (std::size_t i = 0; i < sweep.n.size(); ++i) {
    for (std::size_t j = 0; j < sweep.times.size(); ++j) {
      const PeriodicField& u = sweep.states.at(i).at(j);
      const double t = sweep.times[j];
      const Complex mean = weak_pairing(u, 0) / kTwoPi;
      const double ga = std::abs(mean - limit_candidate_a(config, t));
      const double gb = std::abs(mean - limit_candidate_b(config, t));
      gap_a[j].push_back(ga);
      gap_b[j].push_back(gb);
      std::vector<double> row{static_cast<double>(sweep.n[i]), t, config.dt_for(sweep.n[i]), ga, gb};
      for (int p = -config.probe_band; p <= config.probe_band; ++p) {
        const Complex pairing = weak_pairing(u, p);
        row.push_back(pairing.real());
        row.push_back(pairing.imag());
      }
      report.add_row(std::move(row));
    }
  }

  std::string selected = "undetermined";
  for (std::size_t j = 0; j < sweep.times.size(); ++j) {
    const double first = gap_a[j].front();
    const double last = gap_a[j].back();
    report.add_verdict(make_verdict("AC6.halving", last, "<=", std::max(first / 2.0, kSolverFloor)));
    report.add_verdict(make_verdict("AC6.limit", last, "<=", 0.1));
    const double last_b = gap_b[j].back();
    if (std::abs(last - last_b) > kSolverFloor) selected = last < last_b ? "A" : "B";
  }
  report.set("selected_limit", selected);
  return report;
}

ExperimentReport run_weak_limit(const WeakLimitConfig& config) {
  return weak_limit_report(config, run_mode_sweep(config));
}

bool is_excluded_time(const WeakLimitConfig& config, double t) {
  const double phase = 2.0 * config.gamma * std::norm(config.beta2) * t;
  const double turns = phase / kTwoPi;
  return std::abs(turns - std::round(turns)) < 1e-9;
}

double discontinuity_floor(const WeakLimitConfig& config, double t) {
  const double phase = 2.0 * config.gamma * std::norm(config.beta2) * t;
  return 0.5 * std::abs(config.beta1) * std::abs(1.0 - std::polar(1.0, phase));
}

ExperimentReport discontinuity_report(const WeakLimitConfig& config, SobolevIndex s,
                                      const ModeSweep& sweep) {
  if (!(s.s < 0.0)) throw ConfigError("discontinuity needs a negative Sobolev index");
  ExperimentReport report("discontinuity");
  echo_weak_limit(report, config);
  report.set("sobolev_s", s.s);
  report.set_columns({"n", "t", "input_distance", "input_closed_form", "output_distance", "floor",
                      "probe_distance"});

  const GridSpec grid = config.grid();
  const PeriodicField u0 = constant_field(grid, config.beta1);
  double worst_closed_form = 0.0;
  std::vector<double> inputs;
  for (std::size_t i = 0; i < sweep.n.size(); ++i) {
    const int n = sweep.n[i];
    const double input = hs_norm(config.initial(n) - u0, s);
    const double closed = std::abs(config.beta2) * std::pow(1.0 + static_cast<double>(n) * n, 0.5 * s.s);
    worst_closed_form = std::max(worst_closed_form, std::abs(input - closed) / std::max(closed, 1e-300));
    inputs.push_back(input);
    for (std::size_t j = 0; j < sweep.times.size(); ++j) {
      const double t = sweep.times[j];
      const PeriodicField diff = sweep.states.at(i).at(j) - constant_field(grid, constant_mode_solution(config, t));
      std::vector<std::pair<int, Complex>> low;
      for (int p = -config.probe_band; p <= config.probe_band; ++p) low.emplace_back(p, diff.coeff(p));
      const double probe = hs_norm(PeriodicField::from_modes(grid, std::span(low)), s);
      report.add_row({static_cast<double>(n), t, input, closed, hs_norm(diff, s),
                      discontinuity_floor(config, t), probe});
    }
  }

  report.add_verdict(make_verdict("AC7.input_closed_form", worst_closed_form, "<=", 1e-12));
  if (config.beta2 != Complex{}) {
    double rises = 0;
    for (std::size_t i = 1; i < inputs.size(); ++i) rises += inputs[i] >= inputs[i - 1] ? 1 : 0;
    report.add_verdict(make_verdict("AC7.input_decreasing", rises, "==", 0));
  }

  const std::size_t first_checked = sweep.n.size() > 1 ? 1 : 0;
  for (std::size_t j = 0; j < sweep.times.size(); ++j) {
    const double t = sweep.times[j];
    if (t == 0.0) continue;
    if (is_excluded_time(config, t)) {
      const PeriodicField diff =
          sweep.states.back().at(j) - constant_field(grid, constant_mode_solution(config, t));
      report.add_verdict(make_verdict("AC7.excluded", hs_norm(diff, s), "<", 0.05));
    } else {
      double smallest = std::numeric_limits<double>::infinity();
      for (std::size_t i = first_checked; i < sweep.n.size(); ++i) {
        const PeriodicField diff =
            sweep.states[i].at(j) - constant_field(grid, constant_mode_solution(config, t));
        smallest = std::min(smallest, hs_norm(diff, s));
      }
      report.add_verdict(make_verdict("AC7.floor", smallest, ">=", discontinuity_floor(config, t)));
    }
  }
  return report;
}

ExperimentReport run_discontinuity(const WeakLimitConfig& config, SobolevIndex s) {
  if (!(s.s < 0.0)) throw ConfigError("discontinuity needs a negative Sobolev index");
  return discontinuity_report(config, s, run_mode_sweep(config));
}

ExperimentReport run_gauge_check(const GaugeCheckConfig& config) {
  if (config.theta_sq < 0.0) throw ConfigError("theta_sq must be >= 0");
  const GridSpec grid(config.n_modes);
  const PeriodicField u0 = config.u0.build(grid);
  const double mass_sq = std::pow(l2_norm(u0), 2);
  const double alpha_sq = mass_sq + kTwoPi * config.theta_sq;

  SolverConfig solver;
  solver.gamma = config.gamma;
  solver.grid = grid;
  solver.dt = config.dt;
  solver.t_end = config.t_end;
  solver.record_every = config.record_every;

  solver.equation = Equation::CubicNLS;
  const Trajectory cubic = solve(u0, solver);
  solver.equation = Equation::LimitPDE;
  solver.alpha_sq = alpha_sq;
  const Trajectory limit = solve(u0, solver);
  const double rate = -config.gamma / kPi * (alpha_sq - mass_sq);
  const Trajectory gauged = gauge(limit, rate);

  ExperimentReport report("gauge-check");
  report.set("code_version", kVersion);
  report.set("u0", config.u0.describe());
  report.set("gamma", config.gamma);
  report.set("theta_sq", config.theta_sq);
  report.set("alpha_sq", alpha_sq);
  report.set("phase_rate", rate);
  report.set("n_modes", std::to_string(config.n_modes));
  report.set("dt", config.dt);
  report.set("t_end", config.t_end);
  report.set_columns({"t", "discrepancy", "drift_cubic", "drift_limit"});

  const double mass0 = std::sqrt(mass_sq);
  double worst = 0.0, drift_cubic = 0.0, drift_limit = 0.0;
  for (std::size_t i = 0; i < cubic.states.size(); ++i) {
    const double gap = l2_norm(gauged.states[i] - cubic.states[i]);
    const double dc = mass0 > 0 ? std::abs(l2_norm(cubic.states[i]) - mass0) / mass0 : 0.0;
    const double dl = mass0 > 0 ? std::abs(l2_norm(limit.states[i]) - mass0) / mass0 : 0.0;
    worst = std::max(worst, gap);
    drift_cubic = std::max(drift_cubic, dc);
    drift_limit = std::max(drift_limit, dl);
    report.add_row({cubic.times[i], gap, dc, dl});
  }
  report.add_verdict(make_verdict("AC5", worst, "<=", 1e-5));
  report.add_verdict(make_verdict("AC4.cubic", drift_cubic, "<=", 1e-7));
  report.add_verdict(make_verdict("AC4.limit", drift_limit, "<=", 1e-7));
  return report;
}

std::string report_chart(const ExperimentReport& report) {
  auto series_vs_n = [&](double t, const std::vector<std::string>& names) {
    const auto ns = report.column("n");
    const auto ts = report.column("t");
    std::vector<ChartSeries> out;
    for (const auto& name : names) {
      const auto ys = report.column(name);
      ChartSeries s{name + " (t=" + detail::format_double(t) + ")", {}, {}};
      for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ts[i] == t) {
          s.x.push_back(ns[i]);
          s.y.push_back(ys[i]);
        }
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  auto last_nonzero_t = [&] {
    double pick = 0.0;
    for (double t : report.column("t")) {
      if (t != 0.0) pick = t;
    }
    return pick;
  };

  if (report.name() == "weak-limit" && !report.rows().empty()) {
    return render_line_chart(series_vs_n(last_nonzero_t(), {"gap_A", "gap_B"}),
                             {"Mode-0 pairing gap to candidate limits", "n", "gap", true, true});
  }
  if (report.name() == "discontinuity" && !report.rows().empty()) {
    return render_line_chart(
        series_vs_n(report.column("t").front() != 0.0 ? report.column("t").front() : last_nonzero_t(),
                    {"input_distance", "output_distance", "floor"}),
        {"H^s distances along the sweep", "n", "distance", true, false});
  }
  if (report.name() == "gauge-check" && !report.rows().empty()) {
    return render_line_chart({{"discrepancy", report.column("t"), report.column("discrepancy")}},
                             {"Gauged limit solution vs cubic NLS", "t", "L2 discrepancy", false, true});
  }
  return {};
}

}  // namespace cnls
