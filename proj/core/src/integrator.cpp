#include "cnls/integrator.hpp"

#include <cmath>
#include <string>

#include "cnls/errors.hpp"
#include "cnls/spectral.hpp"
#include "cnls/trilinear.hpp"

namespace cnls {
namespace {

// Holds e^{-i k^2 h} and e^{-i k^2 h/2} for one signed step size.
struct IntegratingFactor {
  std::vector<Complex> full;
  std::vector<Complex> half;

  IntegratingFactor(const GridSpec& grid, double h) {
    full.reserve(static_cast<std::size_t>(grid.size()));
    half.reserve(static_cast<std::size_t>(grid.size()));
    for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
      const double k2 = static_cast<double>(k) * k;
      full.push_back(std::polar(1.0, -k2 * h));
      half.push_back(std::polar(1.0, -0.5 * k2 * h));
    }
  }
};

std::vector<Complex> to_vector(const PeriodicField& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

PeriodicField rk4_step(const PeriodicField& u, const SolverConfig& config,
                       const IntegratingFactor& factor, double h) {
  const GridSpec& grid = u.grid();
  const std::size_t n = static_cast<std::size_t>(grid.size());
  const auto cu = u.coeffs();

  const PeriodicField n1 = nonlinear_forcing(u, config);
  std::vector<Complex> stage(n);
  for (std::size_t i = 0; i < n; ++i) stage[i] = factor.half[i] * (cu[i] + 0.5 * h * n1.coeffs()[i]);
  const PeriodicField n2 = nonlinear_forcing(PeriodicField(grid, stage), config);

  for (std::size_t i = 0; i < n; ++i) stage[i] = factor.half[i] * cu[i] + 0.5 * h * n2.coeffs()[i];
  const PeriodicField n3 = nonlinear_forcing(PeriodicField(grid, stage), config);

  for (std::size_t i = 0; i < n; ++i) {
    stage[i] = factor.full[i] * cu[i] + h * factor.half[i] * n3.coeffs()[i];
  }
  const PeriodicField n4 = nonlinear_forcing(PeriodicField(grid, stage), config);

  std::vector<Complex> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    next[i] = factor.full[i] * (cu[i] + h / 6.0 * n1.coeffs()[i]) +
              h / 3.0 * factor.half[i] * (n2.coeffs()[i] + n3.coeffs()[i]) +
              h / 6.0 * n4.coeffs()[i];
  }
  return PeriodicField(grid, std::move(next));
}

bool all_finite(const PeriodicField& f) {
  for (const Complex& c : f.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

double signed_step(const SolverConfig& config) { return config.t_end < 0.0 ? -config.dt : config.dt; }

}  // namespace

const char* to_string(Equation eq) noexcept {
  return eq == Equation::CubicNLS ? "cubic-nls" : "limit-pde";
}

Equation parse_equation(const std::string& name) {
  if (name == "cubic-nls" || name == "cubic") return Equation::CubicNLS;
  if (name == "limit-pde" || name == "limit") return Equation::LimitPDE;
  throw ConfigError("unknown equation '" + name + "' (expected cubic-nls or limit-pde)");
}

void SolverConfig::validate() const {
  if (!(gamma != 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be finite and nonzero");
  if (!(alpha_sq >= 0.0) || !std::isfinite(alpha_sq)) throw ConfigError("alpha_sq must be >= 0");
  if (!(dt > 0.0) || dt > kMaxTimeStep) {
    throw ConfigError("dt must lie in (0, " + std::to_string(kMaxTimeStep) + "], got " +
                      std::to_string(dt));
  }
  if (!std::isfinite(t_end)) throw ConfigError("t_end must be finite");
  if (record_every < 1) throw ConfigError("record_every must be positive");
  step_count();
}

long SolverConfig::step_count() const {
  const double ratio = std::abs(t_end) / dt;
  const long steps = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(steps)) > 1e-6) {
    throw ConfigError("dt = " + std::to_string(dt) + " does not divide t_end = " +
                      std::to_string(t_end));
  }
  if (steps % record_every != 0) {
    throw ConfigError("step count " + std::to_string(steps) + " is not a multiple of record_every = " +
                      std::to_string(record_every));
  }
  return steps;
}

PeriodicField free_evolution(const PeriodicField& field, double t) {
  const GridSpec& grid = field.grid();
  std::vector<Complex> out = to_vector(field);
  for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
    out[grid.index_of(k)] *= std::polar(1.0, -static_cast<double>(k) * k * t);
  }
  return PeriodicField(grid, std::move(out));
}

PeriodicField nonlinear_forcing(const PeriodicField& state, const SolverConfig& config) {
  if (config.linear_only) return PeriodicField(state.grid());
  const Complex i_gamma(0.0, config.gamma);
  PeriodicField cubic = g_full(state, BandCheck::None);
  if (config.equation == Equation::CubicNLS) return cubic * i_gamma;
  // Lambda_1 + Lambda_2 = |u|^2 u - (1/pi)||u||^2 u, plus the alpha^2 mass term.
  cubic -= resonant_part(state);
  cubic *= i_gamma;
  cubic += state * Complex(0.0, config.gamma / kPi * config.alpha_sq);
  return cubic;
}

PeriodicField step(const PeriodicField& state, const SolverConfig& config) {
  const double h = signed_step(config);
  return rk4_step(state, config, IntegratingFactor(state.grid(), h), h);
}

Trajectory solve(const PeriodicField& u0, const SolverConfig& config) {
  config.validate();
  if (!(u0.grid() == config.grid)) throw GridMismatch("initial datum does not match solver grid");
  if (config.require_quarter_band && band_excess(u0, config.grid.size() / 4) > kBandTolerance) {
    throw BandError("initial datum must be supported in |k| <= N/4");
  }

  const long steps = config.step_count();
  const double h = signed_step(config);
  const IntegratingFactor factor(config.grid, h);
  const double mass0 = l2_norm(u0);

  Trajectory out;
  out.config = config;
  out.times.push_back(0.0);
  out.states.push_back(u0);

  PeriodicField u = u0;
  for (long n = 1; n <= steps; ++n) {
    u = rk4_step(u, config, factor, h);
    if (!all_finite(u)) throw InstabilityError(n, "non-finite coefficients");
    const double mass = l2_norm(u);
    const double drift = mass0 > 0.0 ? std::abs(mass - mass0) / mass0 : mass;
    if (drift > kWatchdogDrift) {
      throw InstabilityError(n, "L2 norm drifted by " + std::to_string(drift));
    }
    if (n % config.record_every == 0) {
      out.times.push_back(static_cast<double>(n) * h);
      out.states.push_back(u);
    }
  }
  return out;
}

Trajectory gauge(const Trajectory& trajectory, double phase_rate) {
  Trajectory out;
  out.config = trajectory.config;
  out.times = trajectory.times;
  out.states.reserve(trajectory.states.size());
  for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
    out.states.push_back(trajectory.states[i] * std::polar(1.0, phase_rate * trajectory.times[i]));
  }
  return out;
}

}  // namespace cnls
