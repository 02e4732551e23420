#include <gtest/gtest.h>

#include <cmath>

#include "cnls/ensemble.hpp"
#include "cnls/errors.hpp"
#include "cnls/integrator.hpp"
#include "cnls/spectral.hpp"
#include "oracles.hpp"

using namespace cnls;

namespace {

double dist(const PeriodicField& a, const PeriodicField& b) { return oracle::l2(a - b); }

SolverConfig config(int n, double dt, double t_end, Equation eq = Equation::CubicNLS) {
  SolverConfig c;
  c.equation = eq;
  c.grid = GridSpec(n);
  c.dt = dt;
  c.t_end = t_end;
  c.record_every = static_cast<int>(std::lround(std::abs(t_end) / dt));
  return c;
}

PeriodicField smooth_data(GridSpec g, std::uint64_t seed) { return random_sparse_field(g, 5, 4, 0.5, seed); }

}  // namespace

TEST(Integrator, PlaneWaves) {
  for (int n : {0, 1, 3, 8})
    for (double alpha : {0.5, 1.0})
      for (double gamma : {1.0, -1.0}) {
        auto c = config(64, 1e-3, 1.0);
        c.gamma = gamma;
        const auto u = solve(oracle::plane_wave(c.grid, n, alpha, gamma, 0.0), c).final_state();
        const auto exact = oracle::plane_wave(c.grid, n, alpha, gamma, 1.0);
        EXPECT_LT(dist(u, exact) / oracle::l2(exact), 1e-6) << n << " " << alpha << " " << gamma;
      }
}

TEST(Integrator, FreeEvolutionMatchesDefinition) {
  const GridSpec g(32);
  const auto f = random_band_field(g, 15, 1);
  EXPECT_LT(dist(free_evolution(f, 0.37), oracle::free(f, 0.37)), 1e-14);
  EXPECT_LT(dist(free_evolution(free_evolution(f, 0.2), -0.2), f), 1e-14);
}

TEST(Integrator, LinearHookGivesFreeGroup) {
  auto c = config(32, 1e-2, 0.5);
  c.linear_only = true;
  const auto u0 = random_band_field(c.grid, 8, 2);
  EXPECT_LT(dist(solve(u0, c).final_state(), oracle::free(u0, 0.5)), 1e-13);
}

TEST(Integrator, RecordsStartAndEveryInterval) {
  auto c = config(32, 1e-2, 0.1);
  c.record_every = 2;
  const auto traj = solve(smooth_data(c.grid, 3), c);
  ASSERT_EQ(traj.times.size(), 6u);
  EXPECT_EQ(traj.times.front(), 0.0);
  EXPECT_NEAR(traj.times.back(), 0.1, 1e-15);
  EXPECT_NEAR(traj.times[1], 0.02, 1e-15);
}

TEST(Integrator, GroupLaw) {
  const auto u0 = smooth_data(GridSpec(64), 4);
  const auto whole = solve(u0, config(64, 1e-3, 0.4)).final_state();
  auto second = config(64, 1e-3, 0.25);
  second.require_quarter_band = false;
  const auto split = solve(solve(u0, config(64, 1e-3, 0.15)).final_state(), second).final_state();
  EXPECT_LT(dist(whole, split), 1e-12);
}

TEST(Integrator, TimeReversal) {
  const auto u0 = smooth_data(GridSpec(64), 5);
  const auto forward = solve(u0, config(64, 1e-3, 0.5)).final_state();
  auto back = config(64, 1e-3, -0.5);
  back.require_quarter_band = false;
  EXPECT_LT(dist(solve(forward, back).final_state(), u0), 1e-9);
}

TEST(Integrator, FourthOrderSelfConvergence) {
  const auto u0 = smooth_data(GridSpec(64), 6);
  const auto a = solve(u0, config(64, 4e-3, 1.0)).final_state();
  const auto b = solve(u0, config(64, 2e-3, 1.0)).final_state();
  const auto c = solve(u0, config(64, 1e-3, 1.0)).final_state();
  EXPECT_GE(std::log2(dist(a, b) / dist(b, c)), 3.5);
}

TEST(Integrator, ConservesMass) {
  const auto u0 = smooth_data(GridSpec(128), 7);
  for (Equation eq : {Equation::CubicNLS, Equation::LimitPDE}) {
    auto c = config(128, 1e-3, 1.0, eq);
    c.record_every = 50;
    c.alpha_sq = std::pow(l2_norm(u0), 2) + kTwoPi * 0.7;
    for (const auto& s : solve(u0, c).states) {
      EXPECT_LT(std::abs(l2_norm(s) / l2_norm(u0) - 1.0), 1e-7);
    }
  }
}

TEST(Integrator, ForcingDefinitions) {
  const GridSpec g(32);
  const auto u = smooth_data(g, 8);
  SolverConfig c;
  c.grid = g;
  c.gamma = -1.5;
  const Complex ig(0.0, c.gamma);
  EXPECT_LT(dist(nonlinear_forcing(u, c), oracle::product(u, u, u) * ig), 1e-12);
  c.equation = Equation::LimitPDE;
  c.alpha_sq = 3.0;
  const double mass = std::pow(oracle::l2(u), 2);
  const auto expected = (oracle::product(u, u, u) - u * Complex(mass / kPi)) * ig + u * Complex(0.0, c.gamma / kPi * 3.0);
  EXPECT_LT(dist(nonlinear_forcing(u, c), expected), 1e-12);
}

TEST(Integrator, GaugedLimitEqualsCubicOnConstants) {
  // u0 = beta constant: both sides have closed forms; phase rate is -2 gamma theta^2.
  const GridSpec g(32);
  const auto u0 = PeriodicField::from_modes(g, {{0, Complex(0.8, 0.3)}});
  auto c = config(32, 1e-3, 1.0, Equation::LimitPDE);
  c.record_every = 100;
  c.alpha_sq = std::pow(l2_norm(u0), 2) + kTwoPi * 1.0;
  const auto gauged = gauge(solve(u0, c), -2.0 * c.gamma * 1.0);
  c.equation = Equation::CubicNLS;
  const auto cubic = solve(u0, c);
  for (std::size_t i = 0; i < cubic.states.size(); ++i) {
    EXPECT_LT(dist(gauged.states[i], cubic.states[i]), 1e-8);
    const Complex exact = Complex(0.8, 0.3) * std::polar(1.0, std::norm(Complex(0.8, 0.3)) * cubic.times[i]);
    EXPECT_LT(std::abs(cubic.states[i].coeff(0) - exact), 1e-8);
  }
}

TEST(Integrator, ConfigValidation) {
  const auto u0 = smooth_data(GridSpec(32), 9);
  EXPECT_THROW(solve(u0, config(32, 0.02, 1.0)), ConfigError);
  EXPECT_THROW(solve(u0, config(32, 3e-3, 1.0)), ConfigError);
  auto c = config(32, 1e-3, 1.0);
  c.record_every = 3;
  EXPECT_THROW(solve(u0, c), ConfigError);
  EXPECT_THROW(solve(u0, config(64, 1e-3, 1.0)), GridMismatch);
  EXPECT_THROW((void)parse_equation("heat"), ConfigError);
  EXPECT_EQ(parse_equation("limit"), Equation::LimitPDE);
  EXPECT_STREQ(to_string(Equation::CubicNLS), "cubic-nls");
}

TEST(Integrator, QuarterBandRequirement) {
  const GridSpec g(32);
  const auto wide = PeriodicField::from_modes(g, {{1, 1.0}, {9, 0.1}});
  EXPECT_THROW(solve(wide, config(32, 1e-2, 0.1)), BandError);
  auto c = config(32, 1e-2, 0.1);
  c.require_quarter_band = false;
  EXPECT_NO_THROW(solve(wide, c));
}

TEST(Integrator, WatchdogStopsBlowUp) {
  const auto u0 = PeriodicField::from_modes(GridSpec(32), {{0, 100.0}});
  try {
    solve(u0, config(32, 1e-2, 1.0));
    FAIL() << "expected InstabilityError";
  } catch (const InstabilityError& e) {
    EXPECT_GE(e.step(), 1);
  }
}
