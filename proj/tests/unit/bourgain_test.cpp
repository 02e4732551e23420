#include <gtest/gtest.h>

#include <cmath>

#include "cnls/bourgain.hpp"
#include "cnls/ensemble.hpp"
#include "cnls/errors.hpp"
#include "cnls/integrator.hpp"
#include "cnls/space_time.hpp"
#include "cnls/spectral.hpp"
#include "oracles.hpp"

using namespace cnls;

namespace {

SpaceTimeField single_mode(int m, int n, int q, int k, Complex c = 1.0) {
  SpaceTimeField f(m, GridSpec(n));
  std::vector<Complex> coeffs(f.coeffs().begin(), f.coeffs().end());
  coeffs[static_cast<std::size_t>(q + m / 2) * n + static_cast<std::size_t>(k + n / 2)] = c;
  return SpaceTimeField(m, GridSpec(n), kTwoPi, std::move(coeffs));
}

SpaceTimeField random_field(int m, int n, std::uint64_t seed) {
  return random_spacetime_field(m, GridSpec(n), kTwoPi, {}, seed);
}

}  // namespace

TEST(SpaceTime, SamplesRoundTrip) {
  const auto f = random_field(8, 16, 1);
  const auto back = SpaceTimeField::from_samples(8, GridSpec(16), kTwoPi, f.to_samples());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) EXPECT_NEAR(std::abs(back.coeffs()[i] - f.coeffs()[i]), 0.0, 1e-14);
}

TEST(SpaceTime, SlicesRoundTrip) {
  const auto f = random_field(8, 16, 2);
  const auto slices = f.time_slices(8);
  const auto back = SpaceTimeField::from_time_slices(slices, kTwoPi);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) EXPECT_NEAR(std::abs(back.coeffs()[i] - f.coeffs()[i]), 0.0, 1e-14);
  // A single time mode q is e^{iqt} at every x.
  const auto mode = single_mode(8, 16, 3, -2, Complex(0.5, 0.5));
  const auto s = mode.time_slices(16);
  EXPECT_NEAR(std::abs(s[5].coeff(-2) - Complex(0.5, 0.5) * std::polar(1.0, 3.0 * kTwoPi * 5 / 16)), 0.0, 1e-14);
}

TEST(SpaceTime, PaddingAndConjugation) {
  const auto f = random_field(8, 8, 3);
  const auto p = f.padded(16, 32);
  EXPECT_EQ(p.coeff(2, -3), f.coeff(2, -3));
  EXPECT_EQ(p.coeff(7, 0), Complex{});
  const auto c = f.conjugate();
  EXPECT_EQ(c.coeff(2, 3), std::conj(f.coeff(-2, -3)));
  EXPECT_THROW(SpaceTimeField(7, GridSpec(8)), ConfigError);
  EXPECT_THROW(f + random_field(8, 16, 4), GridMismatch);
}

TEST(Bourgain, NormMatchesDefinition) {
  const auto f = random_field(16, 16, 5);
  EXPECT_NEAR(xbs_norm(f, {0.375, -0.5}), oracle::xbs(f, 0.375, -0.5), 1e-13);
  EXPECT_NEAR(xbs_norm(f, {0.5, 0.0, Dispersion::Minus}), oracle::xbs(f, 0.5, 0.0, -1), 1e-13);
}

TEST(Bourgain, NormAxioms) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto a = random_field(16, 16, sample_seed(7, 2 * s));
    const auto b = random_field(16, 16, sample_seed(7, 2 * s + 1));
    const BourgainIndex idx{7.0 / 16, -1.0 / 48};
    EXPECT_NEAR(xbs_norm(a * Complex(-2.0, 1.0), idx), std::sqrt(5.0) * xbs_norm(a, idx), 1e-10);
    EXPECT_LE(xbs_norm(a + b, idx), xbs_norm(a, idx) + xbs_norm(b, idx) + 1e-10);
  }
}

TEST(Bourgain, ConjugationIsometry) {
  const auto u = random_field(16, 16, 11);
  const BourgainIndex plus{0.375, -1.0 / 3, Dispersion::Plus};
  const BourgainIndex minus{0.375, -1.0 / 3, Dispersion::Minus};
  EXPECT_NEAR(xbs_norm(u.conjugate(), minus), xbs_norm(u, plus), 1e-12);
}

TEST(Bourgain, ResonanceIdentity) {
  EXPECT_EQ(dispersion_mismatch(1, 2, 3, 0, 0, 0), 24);
  EXPECT_EQ(dispersion_mismatch(1, 2, 3, 5, -4, 9), 24);
  EXPECT_EQ(resonance_defect(1, 2, 3, 5, -4, 9), 0);
  EXPECT_EQ(resonance_defect(0, 0, 0, 0, 0, 0), 0);
  for (int k1 = -6; k1 <= 6; ++k1)
    for (int k2 = -6; k2 <= 6; ++k2)
      for (int k3 = -6; k3 <= 6; ++k3)
        for (int q = -6; q <= 6; ++q) ASSERT_EQ(resonance_defect(k1, k2, k3, q, -q, 2 * q), 0);
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const auto r = [&] { return rng.integer(-1000000, 1000000); };
    const std::int64_t k1 = r(), k2 = r(), k3 = r();
    ASSERT_EQ(resonance_defect(k1, k2, k3, r(), r(), r()), 0);
    ASSERT_EQ(dispersion_mismatch(k1, k2, k3, 0, 0, 0), 2 * (k1 + k2) * (k1 + k3));
  }
}

TEST(Bourgain, L4ClosedForms) {
  EXPECT_NEAR(l4_ratio(single_mode(8, 8, 0, 0)), std::sqrt(kTwoPi), 1e-13);
  const double w = std::pow(1.0 + std::pow(2.0 + 9.0, 2), 3.0 / 16);
  EXPECT_NEAR(l4_ratio(single_mode(8, 8, 2, 3)), std::sqrt(kTwoPi) / w, 1e-13);
  EXPECT_THROW((void)l4_ratio(SpaceTimeField(8, GridSpec(8))), DegenerateInput);
}

TEST(Bourgain, L4MatchesDirectQuadrature) {
  const auto f = random_field(8, 8, 13);
  EXPECT_NEAR(l4_norm(f), oracle::spacetime_l4(f), 1e-12);
}

TEST(Bourgain, LambdaOnSingleModes) {
  const auto e1 = single_mode(8, 8, 0, 1);
  const auto l1 = apply_trilinear(e1, e1, e1, TrilinearPiece::Lambda1);
  EXPECT_EQ(l1.m_times(), 32);
  EXPECT_EQ(l1.grid().size(), 32);
  EXPECT_NEAR(xbs_norm(l1, {0.0, 0.0}), 0.0, 1e-14);
  for (const auto& p : {presets::kEnergy, presets::kDiagonal, presets::kNonresonant}) {
    EXPECT_NEAR(lambda_ratio(e1, e1, e1, TrilinearPiece::Lambda1, p.in, p.out), 0.0, 1e-14);
  }

  const auto l2 = apply_trilinear(e1, e1, e1, TrilinearPiece::Lambda2);
  EXPECT_NEAR(std::abs(l2.coeff(0, 1) - Complex(-1.0)), 0.0, 1e-14);
  // <0 + 1>^b <1>^s on every input, <0 + 1>^{-7/16} <1>^{-1} on the output.
  for (const auto& p : {presets::kEnergy, presets::kDiagonal, presets::kNonresonant}) {
    const double in = std::pow(2.0, p.in.b / 2) * std::pow(2.0, p.in.s / 2);
    const double out = std::pow(2.0, p.out.b / 2) * std::pow(2.0, p.out.s / 2);
    EXPECT_NEAR(lambda_ratio(e1, e1, e1, TrilinearPiece::Lambda2, p.in, p.out), out / (in * in * in), 1e-13)
        << p.name;
  }
}

TEST(Bourgain, LambdaSlicesAgreeWithSpatialOperators) {
  // Inputs constant in time reduce Lambda_i to the spatial operator.
  const GridSpec g(8);
  const auto phi = random_band_field(g, 3, 3);
  std::vector<Complex> c(8 * 8);
  for (int k = -4; k < 4; ++k) c[static_cast<std::size_t>(4 * 8 + k + 4)] = phi.coeff(k);
  const SpaceTimeField u(8, g, kTwoPi, c);
  const auto out = apply_trilinear(u, u, u, TrilinearPiece::Lambda1);
  const auto product = oracle::product(phi.resampled(32), phi.resampled(32), phi.resampled(32));
  const double mass = std::pow(oracle::l2(phi), 2);
  for (int k = -16; k < 16; ++k) {
    Complex expected = product.coeff(k) - phi.resampled(32).coeff(k) * (mass / kPi);
    expected += std::norm(phi.resampled(32).coeff(k)) * phi.resampled(32).coeff(k);
    EXPECT_NEAR(std::abs(out.coeff(0, k) - expected), 0.0, 1e-12) << k;
  }
}

TEST(Bourgain, ZygmundClosedForm) {
  for (int n : {0, 5}) {
    const auto phi = PeriodicField::from_modes(GridSpec(16), {{n, 1.0}});
    for (double t : {1.0 / 16, 0.5}) {
      // |V(t)phi| = 1: (2T 2pi)^{1/4} / (T^{1/8} ||phi||), ||phi|| = sqrt(2pi).
      const double expected = std::pow(2 * t * kTwoPi, 0.25) / (std::pow(t, 0.125) * std::sqrt(kTwoPi));
      EXPECT_NEAR(zygmund_ratio(phi, t), expected, 1e-12);
    }
  }
}

TEST(Bourgain, ZygmundMatchesLatticeSum) {
  const GridSpec g(16);
  const auto phi = random_band_field(g, 4, 19, 1.0);
  for (double t : {1.0 / 16, 1.0 / 4, 1.0 / 2}) {
    const double expected = std::pow(oracle::free_l4_fourth_power(phi, t), 0.25) / (std::pow(t, 0.125) * oracle::l2(phi));
    EXPECT_NEAR(zygmund_ratio(phi, t) / expected, 1.0, 1e-9) << t;
  }
}

TEST(Bourgain, ZygmundPreconditions) {
  const auto phi = PeriodicField::from_modes(GridSpec(8), {{1, 1.0}});
  EXPECT_THROW((void)zygmund_ratio(phi, 1.0), ConfigError);
  EXPECT_THROW((void)zygmund_ratio(phi, 0.0), ConfigError);
  EXPECT_THROW((void)zygmund_ratio(phi, 0.5, 11), ConfigError);
  EXPECT_THROW((void)zygmund_ratio(PeriodicField(GridSpec(8)), 0.5), DegenerateInput);
}

TEST(Bourgain, PlaneWaveTrajectoryConcentratesOnItsLine) {
  // alpha e^{i(2x - (4 - 1) t)}: a single lattice point (q, k) = (-3, 2) when T_w = 2 pi.
  const GridSpec g(16);
  SolverConfig c;
  c.grid = g;
  c.dt = kTwoPi / 64 / 10;
  c.t_end = kTwoPi;
  c.record_every = 10;
  const auto traj = solve(oracle::plane_wave(g, 2, 1.0, 1.0, 0.0), c);
  const auto field = from_trajectory(traj, kTwoPi);
  ASSERT_EQ(field.m_times(), 64);
  EXPECT_NEAR(std::abs(field.coeff(-3, 2) - Complex(1.0)), 0.0, 1e-8);
  double rest = 0.0;
  for (const Complex& z : field.coeffs()) rest += std::norm(z);
  EXPECT_NEAR(rest - std::norm(field.coeff(-3, 2)), 0.0, 1e-14);
  // Off the free line omega = -k^2 by gamma alpha^2 = 1, so the weight is <1>^{1/2}.
  EXPECT_NEAR(xbs_norm(field, {0.5, 0.0}), std::pow(2.0, 0.25), 1e-8);
}

TEST(Bourgain, FromTrajectoryChecksSampling) {
  const GridSpec g(8);
  SolverConfig c;
  c.grid = g;
  c.dt = 0.01;
  c.t_end = 0.5;
  c.record_every = 10;
  const auto traj = solve(PeriodicField::from_modes(g, {{1, 0.1}}), c);
  EXPECT_THROW(from_trajectory(traj, 0.3), ConfigError);  // odd sample count
  EXPECT_THROW(from_trajectory(traj, 0.45), ConfigError);  // not a multiple of the spacing
  EXPECT_THROW(from_trajectory(traj, 2.0), ConfigError);  // longer than the run
  EXPECT_NO_THROW(from_trajectory(traj, 0.4));
}
