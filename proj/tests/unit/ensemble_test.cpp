#include <gtest/gtest.h>

#include <set>

#include "cnls/ensemble.hpp"
#include "cnls/errors.hpp"

using namespace cnls;

TEST(Ensemble, SplitMixReferenceValue) {
  // First output of SplitMix64 started from state 0.
  EXPECT_EQ(sample_seed(0, 0), 0xE220A8397B1DCDAFull);
  EXPECT_NE(sample_seed(42, 0), sample_seed(42, 1));
  EXPECT_NE(sample_seed(42, 0), sample_seed(43, 0));
}

TEST(Ensemble, UniformUsesTopBitsOfMt19937_64) {
  // 14514284786278117030 is the first mt19937_64 output for the default seed 5489.
  Rng rng(5489);
  EXPECT_EQ(rng.uniform(), static_cast<double>(14514284786278117030ull >> 11) * 0x1.0p-53);
}

TEST(Ensemble, IntegerRangeAndCoverage) {
  Rng rng(1);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = rng.integer(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(rng.integer(5, 5), 5);
}

TEST(Ensemble, SpaceTimeFieldShape) {
  const GridSpec g(16);
  const auto f = random_spacetime_field(8, g, kTwoPi, {1.0, 1.0}, 3);
  for (int k = g.min_mode(); k <= g.max_mode(); ++k) EXPECT_EQ(f.coeff(-4, k), Complex{});
  for (int q = -4; q < 4; ++q) EXPECT_EQ(f.coeff(q, -8), Complex{});
  // |coefficient| = <q + k^2>^{-1} <k>^{-1}
  EXPECT_NEAR(std::abs(f.coeff(2, 3)), 1.0 / (std::sqrt(1.0 + 121.0) * std::sqrt(10.0)), 1e-15);
  EXPECT_NEAR(std::abs(f.coeff(-3, 1)), 1.0 / (std::sqrt(1.0 + 4.0) * std::sqrt(2.0)), 1e-15);
}

TEST(Ensemble, DeterministicPerSeed) {
  const GridSpec g(16);
  const auto a = random_band_field(g, 4, 77, 0.5, 2.0);
  const auto b = random_band_field(g, 4, 77, 0.5, 2.0);
  const auto c = random_band_field(g, 4, 78, 0.5, 2.0);
  EXPECT_TRUE(std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin()));
  EXPECT_FALSE(std::equal(a.coeffs().begin(), a.coeffs().end(), c.coeffs().begin()));
  EXPECT_EQ(a.bandwidth(), 4);
  for (int k = -4; k <= 4; ++k) EXPECT_LE(std::abs(a.coeff(k)), 2.0 * std::pow(1.0 + k * k, -0.25) + 1e-15);
}

TEST(Ensemble, SparseField) {
  const GridSpec g(32);
  const auto f = random_sparse_field(g, 5, 4, 0.5, 9);
  int nonzero = 0;
  for (int k = g.min_mode(); k <= g.max_mode(); ++k) {
    const double m = std::abs(f.coeff(k));
    if (m == 0.0) continue;
    ++nonzero;
    EXPECT_LE(std::abs(k), 4);
    EXPECT_GE(m, 0.25);
    EXPECT_LT(m, 0.5);
  }
  EXPECT_EQ(nonzero, 5);
  EXPECT_THROW(random_sparse_field(g, 10, 4, 0.5, 9), ConfigError);
  EXPECT_THROW(random_band_field(g, 16, 1), ConfigError);
}
