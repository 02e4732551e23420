#include "cnls/ensemble.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "cnls/errors.hpp"

namespace cnls {

std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x = engine_();
  if (span != 0) {
    while (limit != 0 && x >= limit) x = engine_();
    x %= span;
  }
  return lo + static_cast<std::int64_t>(x);
}

Complex Rng::unit_phase() { return std::polar(1.0, kTwoPi * uniform()); }

SpaceTimeField random_spacetime_field(int m_times, GridSpec grid, double time_window,
                                      EnsembleParams params, std::uint64_t seed) {
  Rng rng(seed);
  const BourgainIndex decay{-params.a, -params.c, params.variant};
  std::vector<Complex> coeffs(static_cast<std::size_t>(m_times) * static_cast<std::size_t>(grid.size()));
  SpaceTimeField shape(m_times, grid, time_window);
  std::size_t i = 0;
  for (int q = shape.min_time_mode(); q <= shape.max_time_mode(); ++q) {
    for (int k = grid.min_mode(); k <= grid.max_mode(); ++k, ++i) {
      const Complex phase = rng.unit_phase();
      if (q == shape.min_time_mode() || k == grid.min_mode()) continue;
      coeffs[i] = decay.weight(shape.frequency(q), k) * phase;
    }
  }
  return SpaceTimeField(m_times, grid, time_window, std::move(coeffs));
}

PeriodicField random_band_field(GridSpec grid, int max_mode, std::uint64_t seed, double decay,
                                double amplitude) {
  if (max_mode < 0 || !grid.contains(max_mode) || !grid.contains(-max_mode)) {
    throw ConfigError("band " + std::to_string(max_mode) + " does not fit the grid");
  }
  Rng rng(seed);
  std::vector<Complex> coeffs(static_cast<std::size_t>(grid.size()));
  for (int k = -max_mode; k <= max_mode; ++k) {
    const double r = rng.uniform();
    coeffs[grid.index_of(k)] = amplitude * r * std::pow(bracket(k), -decay) * rng.unit_phase();
  }
  return PeriodicField(grid, std::move(coeffs));
}

PeriodicField random_sparse_field(GridSpec grid, int count, int max_mode, double amplitude,
                                  std::uint64_t seed) {
  if (count < 1 || count > 2 * max_mode + 1) {
    throw ConfigError("cannot pick " + std::to_string(count) + " modes from |k| <= " +
                      std::to_string(max_mode));
  }
  if (!grid.contains(max_mode) || !grid.contains(-max_mode)) {
    throw ConfigError("band " + std::to_string(max_mode) + " does not fit the grid");
  }
  Rng rng(seed);
  std::set<int> modes;
  while (static_cast<int>(modes.size()) < count) {
    modes.insert(static_cast<int>(rng.integer(-max_mode, max_mode)));
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(grid.size()));
  for (int k : modes) coeffs[grid.index_of(k)] = amplitude * rng.uniform(0.5, 1.0) * rng.unit_phase();
  return PeriodicField(grid, std::move(coeffs));
}

}  // namespace cnls
