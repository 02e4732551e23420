#pragma once

#include <cstdint>
#include <random>

#include "cnls/bourgain.hpp"
#include "cnls/periodic_field.hpp"
#include "cnls/space_time.hpp"

namespace cnls {

/// Seed for sample `index` of a survey seeded with `base`. SplitMix64 mixing,
/// so each sample's stream is independent of evaluation order.
std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) noexcept;

/// mt19937_64 with portable uniform draws (the standard distributions are
/// implementation-defined, which would break cross-platform reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  Complex unit_phase();

 private:
  std::mt19937_64 engine_;
};

/// Space-time ensemble: u_hat(q,k) = <omega_q +- k^2>^{-a} <k>^{-c} e^{i theta},
/// theta uniform, Nyquist row and column zero.
struct EnsembleParams {
  double a = 1.0;
  double c = 1.0;
  Dispersion variant = Dispersion::Plus;
};

SpaceTimeField random_spacetime_field(int m_times, GridSpec grid, double time_window,
                                      EnsembleParams params, std::uint64_t seed);

/// Dense random field on |k| <= max_mode: r <k>^{-decay} e^{i theta}, r uniform in [0, 1).
PeriodicField random_band_field(GridSpec grid, int max_mode, std::uint64_t seed,
                                double decay = 0.0, double amplitude = 1.0);

/// `count` distinct modes drawn from |k| <= max_mode with coefficients
/// amplitude * r e^{i theta}, r uniform in [0.5, 1).
PeriodicField random_sparse_field(GridSpec grid, int count, int max_mode, double amplitude,
                                  std::uint64_t seed);

}  // namespace cnls
