#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnls/grid.hpp"
#include "cnls/integrator.hpp"
#include "cnls/periodic_field.hpp"
#include "cnls/report.hpp"

namespace cnls {

/// Initial datum description: explicit modes, or `random_count` random modes.
struct InitialData {
  std::vector<std::pair<int, Complex>> modes;
  int random_count = 0;
  int random_band = 4;
  double random_amplitude = 0.5;
  std::uint64_t seed = 0;

  PeriodicField build(GridSpec grid) const;
  std::string describe() const;
};

/// Parses "k:re[:im],k:re[:im],..." into (mode, coefficient) pairs.
std::vector<std::pair<int, Complex>> parse_modes(const std::string& text);

/// Advances `u0` through each time in `times` (sorted, same sign as their
/// differences allow) and returns the state at each. Segments are split into
/// equal steps no longer than `max_dt`.
std::vector<PeriodicField> evolve_to_times(const PeriodicField& u0, SolverConfig config,
                                           const std::vector<double>& times, double max_dt);

/// Sequence u_{0,n} = beta1 + beta2 e^{inx}, swept over n.
struct WeakLimitConfig {
  Complex beta1{1.0, 0.0};
  Complex beta2{1.0, 0.0};
  double gamma = 1.0;
  std::vector<double> t_eval{0.5};
  std::vector<int> n_sweep{8, 16, 32, 64};
  /// Weak convergence is probed with e^{ijx}, |j| <= probe_band.
  int probe_band = 2;
  std::optional<int> n_modes;
  /// Fixed step for every n; otherwise base_dt scaled as (resolved_mode / n)^2 above resolved_mode.
  std::optional<double> dt;
  double base_dt = 1e-3;
  int resolved_mode = 16;
  bool parallel = true;

  void validate() const;
  /// Override, else the smallest power of two >= 8 max(n_sweep).
  GridSpec grid() const;
  double dt_for(int n) const;
  PeriodicField initial(int n) const;
  /// 2 pi (|beta1|^2 + |beta2|^2): the common L^2 mass of the sequence.
  double adherence_alpha_sq() const;
};

/// Limit obtained by inserting the exact constant-mode solution into the
/// weak-limit phase formula: beta1 e^{i gamma (|b1|^2 + 2|b2|^2) t}.
Complex limit_candidate_a(const WeakLimitConfig& config, double t);
/// The alternative closed form beta1 e^{2 i gamma (|b1|^2 + |b2|^2) t}.
Complex limit_candidate_b(const WeakLimitConfig& config, double t);

/// Solutions u_n(t) for every (n, t) of the sweep.
struct ModeSweep {
  std::vector<int> n;
  std::vector<double> times;
  /// states[i][j] = u_{n[i]}(times[j])
  std::vector<std::vector<PeriodicField>> states;
};

ModeSweep run_mode_sweep(const WeakLimitConfig& config);

ExperimentReport run_weak_limit(const WeakLimitConfig& config);
ExperimentReport weak_limit_report(const WeakLimitConfig& config, const ModeSweep& sweep);

/// Excluded times are those with 2 gamma |beta2|^2 t in 2 pi Z; there the
/// weak limit coincides with the unperturbed solution.
bool is_excluded_time(const WeakLimitConfig& config, double t);
double discontinuity_floor(const WeakLimitConfig& config, double t);

ExperimentReport run_discontinuity(const WeakLimitConfig& config, SobolevIndex s);
ExperimentReport discontinuity_report(const WeakLimitConfig& config, SobolevIndex s,
                                      const ModeSweep& sweep);

struct GaugeCheckConfig {
  InitialData u0;
  double gamma = 1.0;
  /// alpha^2 = ||u0||^2 + 2 pi theta_sq.
  double theta_sq = 0.0;
  double t_end = 1.0;
  int n_modes = 128;
  double dt = 1e-3;
  int record_every = 100;
};

/// Solves the limit equation, removes the phase e^{i (gamma/pi)(alpha^2 - ||u0||^2) t}
/// and compares with the cubic NLS solution from the same datum.
ExperimentReport run_gauge_check(const GaugeCheckConfig& config);

enum class SurveyKind {
  L4,
  Lambda,
  Zygmund,
  Resonance,
  Decomposition,
  ExactSolution,
  Conservation,
  Convergence,
  SpaceTime,
};

/// UsageError-style ConfigError for unknown names.
SurveyKind parse_survey_kind(const std::string& name);
const char* to_string(SurveyKind kind) noexcept;

struct SurveyConfig {
  SurveyKind kind = SurveyKind::Resonance;
  std::uint64_t seed = 42;
  /// Meaning depends on kind: lattice sizes (l4, lambda, zygmund), exhaustive
  /// bound (resonance), grid size (decomposition, exact-solution, conservation,
  /// convergence). Empty selects the kind's default.
  std::vector<int> sizes;
  /// Random samples per lattice; 0 selects the kind's default.
  int samples = 0;
  bool parallel = true;
  /// spacetime kind only.
  std::filesystem::path trajectory;
  double time_window = kTwoPi;
};

ExperimentReport run_surveys(const SurveyConfig& config);

/// SVG line chart for reports that have a natural plot; empty otherwise.
std::string report_chart(const ExperimentReport& report);

}  // namespace cnls
