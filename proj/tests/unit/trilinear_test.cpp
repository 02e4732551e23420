#include <gtest/gtest.h>

#include "cnls/ensemble.hpp"
#include "cnls/errors.hpp"
#include "cnls/spectral.hpp"
#include "cnls/trilinear.hpp"
#include "oracles.hpp"

using namespace cnls;

namespace {

double dist(const PeriodicField& a, const PeriodicField& b) { return oracle::l2(a - b); }

bool all_triples(int, int, int) { return true; }

}  // namespace

// u = e^{ix} + e^{2ix}:
//   |u|^2 u = 1 + 3e^{ix} + 3e^{2ix} + e^{3ix}, ||u||^2 = 4 pi,
//   resonant = 4u, Lambda_2 = -u, Lambda_1 = 1 + e^{3ix}.
TEST(Trilinear, TwoModeClosedForm) {
  const GridSpec g(16);
  const auto u = PeriodicField::from_modes(g, {{1, 1.0}, {2, 1.0}});
  const auto parts = decompose(u);
  EXPECT_LT(dist(parts.total, PeriodicField::from_modes(g, {{0, 1.0}, {1, 3.0}, {2, 3.0}, {3, 1.0}})), 1e-14);
  EXPECT_LT(dist(parts.resonant, u * Complex(4.0)), 1e-14);
  EXPECT_LT(dist(parts.lambda2, -u), 1e-15);
  EXPECT_LT(dist(parts.lambda1, PeriodicField::from_modes(g, {{0, 1.0}, {3, 1.0}})), 1e-14);
}

TEST(Trilinear, SingleModeHasNoLambda1) {
  const GridSpec g(16);
  const auto u = PeriodicField::from_modes(g, {{3, Complex(0.6, -0.8)}});
  EXPECT_LT(oracle::l2(lambda1(u, u, u)), 1e-15);
  // |u|^2 u = u for a unimodular wave, split as 2u - u.
  EXPECT_LT(dist(resonant_part(u), u * Complex(2.0)), 1e-15);
}

TEST(Trilinear, FftProductMatchesSampledOracle) {
  const GridSpec g(32);
  const auto u = random_band_field(g, 8, 1);
  const auto v = random_band_field(g, 8, 2);
  const auto w = random_band_field(g, 8, 3);
  EXPECT_LT(dist(g_full(u, v, w), oracle::product(u, v, w)), 1e-12);
  EXPECT_LT(dist(g_full(u), oracle::product(u, u, u)), 1e-12);
}

TEST(Trilinear, FullBandProductIsTruncatedExactly) {
  // With BandCheck::None, wide input must still give the exact truncation.
  const GridSpec g(16);
  const auto u = random_band_field(g, 7, 4);
  const auto v = random_band_field(g, 7, 5);
  EXPECT_THROW((void)g_full(u, v, v), BandError);
  EXPECT_LT(dist(g_full(u, v, v, BandCheck::None), oracle::product(u, v, v)), 1e-12);
  EXPECT_LT(dist(g_full(u, v, v, BandCheck::None), g_oracle(u, v, v, all_triples)), 1e-12);
}

TEST(Trilinear, TripleSumOracleAgrees) {
  const GridSpec g(32);
  const auto u = random_band_field(g, 8, 7);
  const auto v = random_band_field(g, 8, 8);
  const auto w = random_band_field(g, 8, 9);
  EXPECT_LT(dist(g_full(u, v, w), g_oracle(u, v, w, all_triples)), 1e-12);
  EXPECT_LT(dist(lambda1(u, v, w), g_oracle(u, v, w, nonresonant_triple)), 1e-12);
}

TEST(Trilinear, OracleSizeGuard) {
  const GridSpec g(128);
  const PeriodicField z(g);
  EXPECT_THROW((void)g_oracle(z, z, z, all_triples), SizeGuardError);
}

TEST(Trilinear, Trilinearity) {
  const GridSpec g(32);
  const auto u = random_band_field(g, 8, 21);
  const auto u2 = random_band_field(g, 8, 22);
  const auto v = random_band_field(g, 8, 23);
  const auto w = random_band_field(g, 8, 24);
  const Complex a(0.3, -1.2);
  // Conjugate-linear in the first slot, linear in the others.
  EXPECT_LT(dist(g_full(u * a + u2, v, w), g_full(u, v, w) * std::conj(a) + g_full(u2, v, w)), 1e-12);
  EXPECT_LT(dist(g_full(u, v * a, w), g_full(u, v, w) * a), 1e-12);
  EXPECT_LT(dist(lambda1(u, v, w * a), lambda1(u, v, w) * a), 1e-12);
}

TEST(Trilinear, ClosureOverRandomFields) {
  const GridSpec g(32);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto u = random_band_field(g, 8, sample_seed(99, s));
    const auto parts = decompose(u);
    const auto l1 = g_oracle(u, u, u, nonresonant_triple);
    const double n = l2_norm(u);
    EXPECT_LT(dist(parts.total, parts.resonant + l1 + parts.lambda2), 1e-10 * (1 + n * n * n));
  }
}

TEST(Trilinear, ResonanceMask) {
  EXPECT_TRUE(nonresonant_triple(1, 2, 3));
  EXPECT_FALSE(nonresonant_triple(1, -1, 3));
  EXPECT_FALSE(nonresonant_triple(2, 5, -2));
}

TEST(Trilinear, GridMismatch) {
  const PeriodicField a(GridSpec(16));
  const PeriodicField b(GridSpec(32));
  EXPECT_THROW((void)g_full(a, b, a), GridMismatch);
  EXPECT_THROW((void)lambda2(a, a, b), GridMismatch);
}
