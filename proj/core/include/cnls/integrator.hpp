#pragma once

#include <string>
#include <vector>

#include "cnls/grid.hpp"
#include "cnls/periodic_field.hpp"

namespace cnls {

enum class Equation {
  /// i u_t + u_xx + gamma |u|^2 u = 0
  CubicNLS,
  /// i v_t + v_xx + gamma (Lambda_1 + Lambda_2)(v) + (gamma/pi) alpha^2 v = 0
  LimitPDE,
};

const char* to_string(Equation eq) noexcept;
/// Accepts "cubic-nls" / "limit-pde" (and the short forms "cubic" / "limit").
Equation parse_equation(const std::string& name);

struct SolverConfig {
  Equation equation = Equation::CubicNLS;
  double gamma = 1.0;
  double alpha_sq = 0.0;
  double dt = 1e-3;
  /// Negative values integrate backwards in time.
  double t_end = 1.0;
  GridSpec grid{128};
  int record_every = 1;
  /// Reject initial data with relative mass above kBandTolerance outside
  /// |k| <= N/4. Continuation runs starting from an evolved state turn it off.
  bool require_quarter_band = true;
  /// Test hook: drop the nonlinear forcing so step() is the free group.
  bool linear_only = false;

  /// Throws ConfigError when an invariant fails.
  void validate() const;
  /// Number of steps needed to reach t_end; ConfigError if dt does not divide it.
  long step_count() const;
};

inline constexpr double kMaxTimeStep = 0.01;
/// Relative L^2 drift that aborts a run.
inline constexpr double kWatchdogDrift = 1e-3;
/// Relative mass allowed outside |k| <= N/4 in initial data.
inline constexpr double kBandTolerance = 1e-12;

struct Trajectory {
  std::vector<double> times;
  std::vector<PeriodicField> states;
  SolverConfig config;

  const PeriodicField& final_state() const { return states.back(); }
};

/// V(t): multiplies mode k by e^{-i k^2 t}.
PeriodicField free_evolution(const PeriodicField& field, double t);

/// Right-hand side of u_t = i u_xx + F(u) without the linear part: F(u).
PeriodicField nonlinear_forcing(const PeriodicField& state, const SolverConfig& config);

/// One integrating-factor RK4 step of size dt (signed by t_end) in the
/// interaction variables w(k) = e^{i k^2 t} u_hat(k).
PeriodicField step(const PeriodicField& state, const SolverConfig& config);

/// Integrates from u0 to t_end, recording every `record_every` steps
/// including t = 0 and t = t_end. Throws InstabilityError on non-finite
/// values or when the L^2 norm drifts beyond kWatchdogDrift.
Trajectory solve(const PeriodicField& u0, const SolverConfig& config);

/// Multiplies each recorded state by e^{i phase_rate t}.
Trajectory gauge(const Trajectory& trajectory, double phase_rate);

}  // namespace cnls
