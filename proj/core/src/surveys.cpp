#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cnls/bourgain.hpp"
#include "cnls/ensemble.hpp"
#include "cnls/errors.hpp"
#include "cnls/experiments.hpp"
#include "cnls/space_time.hpp"
#include "cnls/spectral.hpp"
#include "cnls/trajectory_io.hpp"
#include "cnls/trilinear.hpp"
#include "cnls/version.hpp"
#include "number_format.hpp"
#include "parallel.hpp"

namespace cnls {
namespace {

constexpr std::array<LambdaPreset, 3> kPresets{presets::kEnergy, presets::kDiagonal, presets::kNonresonant};
constexpr std::array<double, 4> kZygmundTimes{1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2};

// Random data shared by the solver surveys: five modes in |k| <= 4.
constexpr int kDataModes = 5;
constexpr int kDataBand = 4;
constexpr double kDataAmplitude = 0.5;

std::vector<int> sizes_or(const SurveyConfig& config, std::vector<int> fallback) {
  return config.sizes.empty() ? fallback : config.sizes;
}

int samples_or(const SurveyConfig& config, int fallback) {
  if (config.samples < 0) throw ConfigError("samples must be >= 0");
  return config.samples == 0 ? fallback : config.samples;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

ExperimentReport start(const SurveyConfig& config, const std::vector<int>& sizes, int samples) {
  ExperimentReport report(std::string("survey-") + to_string(config.kind));
  report.set("code_version", kVersion);
  report.set("kind", to_string(config.kind));
  report.set("seed", std::to_string(config.seed));
  report.set("sizes", join(sizes));
  if (samples > 0) report.set("samples", std::to_string(samples));
  return report;
}

PeriodicField random_data(GridSpec grid, std::uint64_t seed) {
  return random_sparse_field(grid, kDataModes, kDataBand, kDataAmplitude, seed);
}

// Verdicts shared by the empirical-constant surveys: the sup over samples is
// finite and positive, and moves by at most a factor 2 between the smallest
// and largest lattice.
void stability_verdicts(ExperimentReport& report, const std::string& label,
                        const std::vector<double>& sups, double smallest) {
  const std::string id = "AC8." + label;
  report.add_verdict(make_verdict(id + ".positive", smallest, ">", 0.0));
  double finite = 1.0;
  for (double s : sups) finite = std::min(finite, std::isfinite(s) ? 1.0 : 0.0);
  report.add_verdict(make_verdict(id + ".finite", finite, "==", 1.0));
  if (sups.size() >= 2) {
    const double ratio = sups.back() / sups.front();
    report.add_verdict(make_verdict(id + ".stability", std::max(ratio, 1.0 / ratio), "<=", 2.0));
  }
}

ExperimentReport survey_l4(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {32, 64});
  const int samples = samples_or(config, 200);
  ExperimentReport report = start(config, sizes, samples);
  const EnsembleParams params;
  report.set("ensemble", "a=1 c=1 plus");
  report.set_columns({"m", "n", "sample", "ratio"});

  std::vector<double> sups;
  double smallest = std::numeric_limits<double>::infinity();
  for (int size : sizes) {
    const GridSpec grid(size);
    const auto ratios = detail::parallel_map(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
          return l4_ratio(random_spacetime_field(size, grid, kTwoPi, params, sample_seed(config.seed, i)));
        },
        config.parallel);
    double sup = 0.0;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      report.add_row({static_cast<double>(size), static_cast<double>(size), static_cast<double>(i), ratios[i]});
      sup = std::max(sup, ratios[i]);
      smallest = std::min(smallest, ratios[i]);
    }
    sups.push_back(sup);
  }
  stability_verdicts(report, "l4", sups, smallest);
  return report;
}

ExperimentReport survey_lambda(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {32, 64});
  const int samples = samples_or(config, 200);
  ExperimentReport report = start(config, sizes, samples);
  const EnsembleParams params;
  report.set("ensemble", "a=1 c=1 plus");
  std::string names;
  for (std::size_t p = 0; p < kPresets.size(); ++p) {
    names += (p ? " " : "") + std::to_string(p) + "=" + std::string(kPresets[p].name);
  }
  report.set("presets", names);
  report.set_columns({"m", "n", "sample", "piece", "preset", "ratio"});

  // sups[piece][preset] per size
  std::vector<std::array<std::array<double, 3>, 2>> sups;
  std::array<std::array<double, 3>, 2> smallest{};
  for (auto& row : smallest) row.fill(std::numeric_limits<double>::infinity());

  for (int size : sizes) {
    const GridSpec grid(size);
    using Ratios = std::array<std::array<double, 3>, 2>;
    const auto results = detail::parallel_map(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
          std::array<SpaceTimeField, 3> f{
              random_spacetime_field(size, grid, kTwoPi, params, sample_seed(config.seed, 3 * i)),
              random_spacetime_field(size, grid, kTwoPi, params, sample_seed(config.seed, 3 * i + 1)),
              random_spacetime_field(size, grid, kTwoPi, params, sample_seed(config.seed, 3 * i + 2))};
          Ratios out{};
          for (int piece = 0; piece < 2; ++piece) {
            const auto which = piece == 0 ? TrilinearPiece::Lambda1 : TrilinearPiece::Lambda2;
            const SpaceTimeField image = apply_trilinear(f[0], f[1], f[2], which);
            for (std::size_t p = 0; p < kPresets.size(); ++p) {
              double denom = 1.0;
              for (const auto& x : f) denom *= xbs_norm(x, kPresets[p].in);
              if (denom == 0.0) throw DegenerateInput("lambda_ratio with a zero input");
              out[piece][p] = xbs_norm(image, kPresets[p].out) / denom;
            }
          }
          return out;
        },
        config.parallel);

    Ratios sup{};
    for (std::size_t i = 0; i < results.size(); ++i) {
      for (int piece = 0; piece < 2; ++piece) {
        for (std::size_t p = 0; p < kPresets.size(); ++p) {
          const double r = results[i][piece][p];
          report.add_row({static_cast<double>(size), static_cast<double>(size), static_cast<double>(i),
                          static_cast<double>(piece + 1), static_cast<double>(p), r});
          sup[piece][p] = std::max(sup[piece][p], r);
          smallest[piece][p] = std::min(smallest[piece][p], r);
        }
      }
    }
    sups.push_back(sup);
  }
  for (int piece = 0; piece < 2; ++piece) {
    for (std::size_t p = 0; p < kPresets.size(); ++p) {
      std::vector<double> per_size;
      for (const auto& s : sups) per_size.push_back(s[piece][p]);
      stability_verdicts(report, "lambda" + std::to_string(piece + 1) + "." + std::string(kPresets[p].name),
                         per_size, smallest[piece][p]);
    }
  }
  return report;
}

ExperimentReport survey_zygmund(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {32, 64});
  const int samples = samples_or(config, 200);
  ExperimentReport report = start(config, sizes, samples);
  report.set("data", "dense |k| <= N/4, coefficients r <k>^-1 e^{i theta}");
  report.set_columns({"n", "sample", "t_small", "ratio"});

  std::vector<std::array<double, kZygmundTimes.size()>> sups;
  std::array<double, kZygmundTimes.size()> smallest{};
  smallest.fill(std::numeric_limits<double>::infinity());
  for (int size : sizes) {
    const GridSpec grid(size);
    const auto results = detail::parallel_map(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
          const PeriodicField phi = random_band_field(grid, size / 4, sample_seed(config.seed, i), 1.0);
          std::array<double, kZygmundTimes.size()> out{};
          for (std::size_t j = 0; j < kZygmundTimes.size(); ++j) out[j] = zygmund_ratio(phi, kZygmundTimes[j]);
          return out;
        },
        config.parallel);
    std::array<double, kZygmundTimes.size()> sup{};
    for (std::size_t i = 0; i < results.size(); ++i) {
      for (std::size_t j = 0; j < kZygmundTimes.size(); ++j) {
        report.add_row({static_cast<double>(size), static_cast<double>(i), kZygmundTimes[j], results[i][j]});
        sup[j] = std::max(sup[j], results[i][j]);
        smallest[j] = std::min(smallest[j], results[i][j]);
      }
    }
    sups.push_back(sup);
  }
  for (std::size_t j = 0; j < kZygmundTimes.size(); ++j) {
    std::vector<double> per_size;
    for (const auto& s : sups) per_size.push_back(s[j]);
    stability_verdicts(report, "zygmund.T" + detail::format_double(kZygmundTimes[j]), per_size, smallest[j]);
  }
  return report;
}

ExperimentReport survey_resonance(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {6});
  const int samples = samples_or(config, 10000);
  ExperimentReport report = start(config, sizes, samples);
  report.set_columns({"bound", "tuples", "max_abs_defect"});

  double worst = 0.0;
  for (int bound : sizes) {
    if (bound < 0) throw ConfigError("resonance bound must be >= 0");
    std::int64_t max_defect = 0;
    double tuples = 0;
    for (int k1 = -bound; k1 <= bound; ++k1)
      for (int k2 = -bound; k2 <= bound; ++k2)
        for (int k3 = -bound; k3 <= bound; ++k3)
          for (int q1 = -bound; q1 <= bound; ++q1)
            for (int q2 = -bound; q2 <= bound; ++q2)
              for (int q3 = -bound; q3 <= bound; ++q3) {
                max_defect = std::max(max_defect, std::abs(resonance_defect(k1, k2, k3, q1, q2, q3)));
                tuples += 1;
              }
    report.add_row({static_cast<double>(bound), tuples, static_cast<double>(max_defect)});
    worst = std::max(worst, static_cast<double>(max_defect));
  }

  constexpr std::int64_t kRandomBound = 1000000;
  Rng rng(config.seed);
  std::int64_t max_defect = 0;
  for (int i = 0; i < samples; ++i) {
    std::array<std::int64_t, 6> t{};
    for (auto& x : t) x = rng.integer(-kRandomBound, kRandomBound);
    max_defect = std::max(max_defect, std::abs(resonance_defect(t[0], t[1], t[2], t[3], t[4], t[5])));
  }
  report.add_row({static_cast<double>(kRandomBound), static_cast<double>(samples), static_cast<double>(max_defect)});
  worst = std::max(worst, static_cast<double>(max_defect));
  report.set("mismatch(1,2,3,0,0,0)", std::to_string(dispersion_mismatch(1, 2, 3, 0, 0, 0)));
  report.add_verdict(make_verdict("AC3", worst, "==", 0.0));
  return report;
}

ExperimentReport survey_decomposition(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {32});
  const int samples = samples_or(config, 100);
  ExperimentReport report = start(config, sizes, samples);
  report.set("data", "dense |k| <= N/4, coefficients r e^{i theta}, r uniform in [0, 1)");
  report.set_columns({"n", "sample", "l2_norm", "closure_residual", "oracle_gap"});

  double worst_closure = 0.0, worst_oracle = 0.0;
  for (int size : sizes) {
    const GridSpec grid(size);
    struct Row {
      double norm, closure, oracle;
    };
    const auto rows = detail::parallel_map(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
          const PeriodicField u = random_band_field(grid, size / 4, sample_seed(config.seed, i));
          const TrilinearResult parts = decompose(u);
          // Lambda_1 from the brute-force sum, so the closure is not true by construction.
          const PeriodicField l1_oracle = g_oracle(u, u, u, nonresonant_triple);
          const PeriodicField g_brute = g_oracle(u, u, u, [](int, int, int) { return true; });
          const double norm = l2_norm(u);
          const double closure =
              l2_norm(parts.total - parts.resonant - l1_oracle - parts.lambda2) / (1.0 + norm * norm * norm);
          const double oracle = std::max(l2_norm(parts.total - g_brute), l2_norm(parts.lambda1 - l1_oracle));
          return Row{norm, closure, oracle};
        },
        config.parallel);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      report.add_row({static_cast<double>(size), static_cast<double>(i), rows[i].norm, rows[i].closure,
                      rows[i].oracle});
      worst_closure = std::max(worst_closure, rows[i].closure);
      worst_oracle = std::max(worst_oracle, rows[i].oracle);
    }
  }
  report.add_verdict(make_verdict("AC2.closure", worst_closure, "<=", 1e-10));
  report.add_verdict(make_verdict("AC2.oracle", worst_oracle, "<=", 1e-10));
  return report;
}

ExperimentReport survey_exact_solution(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {128});
  ExperimentReport report = start(config, sizes, 0);
  report.set("dt", 1e-3);
  report.set("t_end", 1.0);
  report.set_columns({"n_modes", "n", "alpha", "gamma", "rel_error"});

  struct Case {
    int size, n;
    double alpha, gamma;
  };
  std::vector<Case> cases;
  for (int size : sizes)
    for (int n : {0, 1, 3, 8})
      for (double alpha : {0.5, 1.0})
        for (double gamma : {1.0, -1.0}) cases.push_back({size, n, alpha, gamma});

  const auto errors = detail::parallel_map(
      cases.size(),
      [&](std::size_t i) {
        const Case& c = cases[i];
        SolverConfig solver;
        solver.grid = GridSpec(c.size);
        solver.gamma = c.gamma;
        solver.dt = 1e-3;
        solver.t_end = 1.0;
        solver.record_every = 1000;
        const PeriodicField u0 = PeriodicField::from_modes(solver.grid, {{c.n, Complex(c.alpha, 0.0)}});
        const PeriodicField u = solve(u0, solver).final_state();
        // |alpha|^2 here is the pointwise modulus, not the L^2 mass.
        const double t = solver.t_end;
        const Complex phase = std::polar(1.0, -t * (static_cast<double>(c.n) * c.n - c.gamma * c.alpha * c.alpha));
        const PeriodicField exact = PeriodicField::from_modes(solver.grid, {{c.n, c.alpha * phase}});
        return l2_norm(u - exact) / l2_norm(exact);
      },
      config.parallel);

  double worst = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    report.add_row({static_cast<double>(c.size), static_cast<double>(c.n), c.alpha, c.gamma, errors[i]});
    worst = std::max(worst, errors[i]);
  }
  report.add_verdict(make_verdict("AC1", worst, "<=", 1e-6));
  return report;
}

ExperimentReport survey_conservation(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {128});
  const int samples = samples_or(config, 20);
  ExperimentReport report = start(config, sizes, samples);
  constexpr double kThetaSq = 0.7;
  report.set("data", "5 random modes in |k| <= 4, amplitude 0.5");
  report.set("theta_sq", kThetaSq);
  report.set("dt", 1e-3);
  report.set("t_end", 1.0);
  report.set_columns({"n_modes", "sample", "equation", "max_drift"});

  double worst = 0.0;
  for (int size : sizes) {
    const auto drifts = detail::parallel_map(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
          SolverConfig solver;
          solver.grid = GridSpec(size);
          solver.dt = 1e-3;
          solver.t_end = 1.0;
          solver.record_every = 10;
          const PeriodicField u0 = random_data(solver.grid, sample_seed(config.seed, i));
          const double mass = l2_norm(u0);
          std::array<double, 2> out{};
          for (int e = 0; e < 2; ++e) {
            solver.equation = e == 0 ? Equation::CubicNLS : Equation::LimitPDE;
            solver.alpha_sq = mass * mass + kTwoPi * kThetaSq;
            for (const auto& state : solve(u0, solver).states) {
              out[e] = std::max(out[e], std::abs(l2_norm(state) - mass) / mass);
            }
          }
          return out;
        },
        config.parallel);
    for (std::size_t i = 0; i < drifts.size(); ++i) {
      for (int e = 0; e < 2; ++e) {
        report.add_row({static_cast<double>(size), static_cast<double>(i), static_cast<double>(e), drifts[i][e]});
        worst = std::max(worst, drifts[i][e]);
      }
    }
  }
  report.set("equation_codes", "0=cubic-nls 1=limit-pde");
  report.add_verdict(make_verdict("AC4", worst, "<=", 1e-7));
  return report;
}

ExperimentReport survey_convergence(const SurveyConfig& config) {
  const auto sizes = sizes_or(config, {64});
  const int samples = samples_or(config, 3);
  ExperimentReport report = start(config, sizes, samples);
  const std::array<double, 3> steps{4e-3, 2e-3, 1e-3};
  report.set("data", "5 random modes in |k| <= 4, amplitude 0.5");
  report.set("dt_levels", "0.004 0.002 0.001");
  report.set("t_end", 1.0);
  report.set_columns({"n_modes", "sample", "diff_coarse", "diff_fine", "order"});

  double worst = std::numeric_limits<double>::infinity();
  for (int size : sizes) {
    const auto orders = detail::parallel_map(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
          SolverConfig solver;
          solver.grid = GridSpec(size);
          solver.t_end = 1.0;
          const PeriodicField u0 = random_data(solver.grid, sample_seed(config.seed, i));
          std::vector<PeriodicField> finals;
          for (double dt : steps) {
            solver.dt = dt;
            solver.record_every = static_cast<int>(solver.step_count());
            finals.push_back(solve(u0, solver).final_state());
          }
          const double coarse = l2_norm(finals[0] - finals[1]);
          const double fine = l2_norm(finals[1] - finals[2]);
          return std::array<double, 3>{coarse, fine, std::log2(coarse / fine)};
        },
        config.parallel);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      report.add_row({static_cast<double>(size), static_cast<double>(i), orders[i][0], orders[i][1], orders[i][2]});
      worst = std::min(worst, orders[i][2]);
    }
  }
  report.add_verdict(make_verdict("AC9", worst, ">=", 3.5));
  return report;
}

ExperimentReport survey_spacetime(const SurveyConfig& config) {
  if (config.trajectory.empty()) throw ConfigError("the spacetime survey needs a trajectory file");
  const Trajectory traj = read_trajectory(config.trajectory);
  const SpaceTimeField field = from_trajectory(traj, config.time_window);
  ExperimentReport report(std::string("survey-") + to_string(config.kind));
  report.set("code_version", kVersion);
  report.set("kind", to_string(config.kind));
  report.set("trajectory", config.trajectory.filename().string());
  report.set("time_window", config.time_window);
  report.set_columns({"m", "n", "l4_norm", "x_3/8_0", "x_1/2_0", "l4_ratio"});
  report.add_row({static_cast<double>(field.m_times()), static_cast<double>(field.grid().size()),
                  l4_norm(field), xbs_norm(field, {3.0 / 8.0, 0.0}), xbs_norm(field, {0.5, 0.0}),
                  l4_ratio(field)});
  return report;
}

}  // namespace

SurveyKind parse_survey_kind(const std::string& name) {
  for (SurveyKind kind : {SurveyKind::L4, SurveyKind::Lambda, SurveyKind::Zygmund, SurveyKind::Resonance,
                          SurveyKind::Decomposition, SurveyKind::ExactSolution, SurveyKind::Conservation,
                          SurveyKind::Convergence, SurveyKind::SpaceTime}) {
    if (name == to_string(kind)) return kind;
  }
  throw ConfigError("unknown survey kind '" + name +
                    "' (expected l4, lambda, zygmund, resonance, decomposition, exact-solution, "
                    "conservation, convergence or spacetime)");
}

const char* to_string(SurveyKind kind) noexcept {
  switch (kind) {
    case SurveyKind::L4: return "l4";
    case SurveyKind::Lambda: return "lambda";
    case SurveyKind::Zygmund: return "zygmund";
    case SurveyKind::Resonance: return "resonance";
    case SurveyKind::Decomposition: return "decomposition";
    case SurveyKind::ExactSolution: return "exact-solution";
    case SurveyKind::Conservation: return "conservation";
    case SurveyKind::Convergence: return "convergence";
    case SurveyKind::SpaceTime: return "spacetime";
  }
  return "?";
}

ExperimentReport run_surveys(const SurveyConfig& config) {
  switch (config.kind) {
    case SurveyKind::L4: return survey_l4(config);
    case SurveyKind::Lambda: return survey_lambda(config);
    case SurveyKind::Zygmund: return survey_zygmund(config);
    case SurveyKind::Resonance: return survey_resonance(config);
    case SurveyKind::Decomposition: return survey_decomposition(config);
    case SurveyKind::ExactSolution: return survey_exact_solution(config);
    case SurveyKind::Conservation: return survey_conservation(config);
    case SurveyKind::Convergence: return survey_convergence(config);
    case SurveyKind::SpaceTime: return survey_spacetime(config);
  }
  throw ConfigError("unknown survey kind");
}

}  // namespace cnls
