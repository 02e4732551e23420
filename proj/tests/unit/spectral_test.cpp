#include <gtest/gtest.h>

#include "cnls/ensemble.hpp"
#include "cnls/errors.hpp"
#include "cnls/spectral.hpp"
#include "oracles.hpp"

using namespace cnls;

namespace {

double max_gap(const PeriodicField& a, const PeriodicField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return m;
}

}  // namespace

TEST(Spectral, TransformsMatchDirectSums) {
  const GridSpec g(16);
  const auto f = random_band_field(g, 7, 11);
  const auto values = to_physical(f);
  const auto expected = oracle::samples(f, 16);
  for (std::size_t j = 0; j < values.size(); ++j) EXPECT_NEAR(std::abs(values[j] - expected[j]), 0.0, 1e-13);
  EXPECT_LT(max_gap(to_spectral(g, values), f), 1e-14);
  EXPECT_LT(max_gap(oracle::coefficients(values, g), f), 1e-13);
}

TEST(Spectral, FineSynthesisAndProjection) {
  const GridSpec g(8);
  const auto f = random_band_field(g, 3, 5);
  const auto fine = synthesize(f, 32);
  const auto expected = oracle::samples(f, 32);
  for (std::size_t j = 0; j < fine.size(); ++j) EXPECT_NEAR(std::abs(fine[j] - expected[j]), 0.0, 1e-13);
  EXPECT_LT(max_gap(project(fine, g), f), 1e-14);
}

TEST(Spectral, LengthMismatch) {
  EXPECT_THROW(to_spectral(GridSpec(8), std::vector<Complex>(6)), DimensionError);
}

TEST(Spectral, Norms) {
  const GridSpec g(32);
  const auto f = random_band_field(g, 7, 3, 0.5);
  EXPECT_NEAR(l2_norm(f), oracle::l2(f), 1e-13);
  EXPECT_NEAR(hs_norm(f, {-0.5}), oracle::hs(f, -0.5), 1e-13);
  EXPECT_NEAR(hs_norm(f, {1.0}), oracle::hs(f, 1.0), 1e-12);
  EXPECT_NEAR(hs_norm(f, {0.0}), l2_norm(f) / std::sqrt(kTwoPi), 1e-13);
  EXPECT_NEAR(lp_norm(f, 2), oracle::lp(f, 2), 1e-12);
  // Support in |k| < N/4 makes the 4-norm quadrature exact.
  EXPECT_NEAR(lp_norm(f, 4), oracle::lp(f, 4), 1e-12);
  EXPECT_THROW((void)lp_norm(f, 3), std::invalid_argument);
}

TEST(Spectral, ClosedFormNorms) {
  const GridSpec g(16);
  const auto one = PeriodicField::from_modes(g, {{0, 1.0}});
  EXPECT_NEAR(l2_norm(one), std::sqrt(kTwoPi), 1e-15);
  EXPECT_NEAR(lp_norm(one, 4), std::pow(kTwoPi, 0.25), 1e-15);
  const auto wave = PeriodicField::from_modes(g, {{3, Complex(0, 2)}});
  EXPECT_NEAR(hs_norm(wave, {-0.5}), 2.0 * std::pow(10.0, -0.25), 1e-15);
}

TEST(Spectral, WeakPairing) {
  const GridSpec g(16);
  const auto f = PeriodicField::from_modes(g, {{2, Complex(1, -1)}});
  EXPECT_EQ(weak_pairing(f, 2), kTwoPi * Complex(1, -1));
  EXPECT_EQ(weak_pairing(f, 0), Complex{});
  EXPECT_NO_THROW((void)weak_pairing(f, 7));
  EXPECT_THROW((void)weak_pairing(f, 8), RangeError);
  EXPECT_THROW((void)weak_pairing(f, -8), RangeError);
}

TEST(Spectral, BandExcess) {
  const GridSpec g(16);
  const auto f = PeriodicField::from_modes(g, {{1, 1.0}, {6, 1.0}});
  EXPECT_DOUBLE_EQ(band_excess(f, 4), 1.0 / std::sqrt(2.0));
  EXPECT_EQ(band_excess(f, 6), 0.0);
  EXPECT_EQ(band_excess(PeriodicField(g), 0), 0.0);
}
