#pragma once

#include <span>
#include <vector>

#include "cnls/grid.hpp"
#include "cnls/integrator.hpp"
#include "cnls/periodic_field.hpp"

namespace cnls {

/// Coefficients u_hat(q, k) of a function on the torus [0, T_w) x [0, 2pi).
///
/// q runs over -M/2 .. M/2-1 and stands for the angular frequency 2 pi q / T_w;
/// k runs over the spatial band of `grid`. With T_w = 2 pi this is
/// u_hat(q,k) = (2pi)^{-2} \int e^{-i(qt + kx)} u. Storage is row-major with
/// time mode as the row: index (q + M/2) * N + (k + N/2).
class SpaceTimeField {
 public:
  SpaceTimeField(int m_times, GridSpec grid, double time_window = kTwoPi);
  SpaceTimeField(int m_times, GridSpec grid, double time_window, std::vector<Complex> coeffs);

  /// From samples u(t_i, x_j), t_i = i T_w / M, stored row-major by time.
  static SpaceTimeField from_samples(int m_times, GridSpec grid, double time_window,
                                     std::span<const Complex> values);

  /// Spatial coefficients at each of `n_times` equispaced times over the window
  /// (n_times >= M, even), i.e. the field with its time spectrum zero-padded.
  std::vector<PeriodicField> time_slices(int n_times) const;
  /// Inverse of time_slices(): slices at t_i = i T_w / n, n = slices.size(), all
  /// on one grid. Keeps every time mode, so the result has n time modes.
  static SpaceTimeField from_time_slices(std::span<const PeriodicField> slices, double time_window);

  /// Samples on the M x N collocation lattice.
  std::vector<Complex> to_samples() const;

  int m_times() const noexcept { return m_; }
  const GridSpec& grid() const noexcept { return grid_; }
  double time_window() const noexcept { return window_; }
  int min_time_mode() const noexcept { return -m_ / 2; }
  int max_time_mode() const noexcept { return m_ / 2 - 1; }
  /// Angular frequency of time mode q.
  double frequency(int q) const noexcept { return kTwoPi * q / window_; }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex coeff(int q, int k) const;
  Complex coeff_or_zero(int q, int k) const noexcept;

  /// Same field with its spectrum embedded in a larger lattice.
  SpaceTimeField padded(int m_times, int n_modes) const;

  /// Spectrum of the pointwise conjugate: c_hat(q,k) = conj(u_hat(-q,-k)),
  /// indices taken modulo the lattice.
  SpaceTimeField conjugate() const;

  SpaceTimeField& operator+=(const SpaceTimeField& other);
  SpaceTimeField& operator*=(Complex scale);
  friend SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b) { return a += b; }
  friend SpaceTimeField operator*(SpaceTimeField a, Complex c) { return a *= c; }
  friend SpaceTimeField operator*(Complex c, SpaceTimeField a) { return a *= c; }

 private:
  std::size_t index(int q, int k) const noexcept {
    return static_cast<std::size_t>(q + m_ / 2) * static_cast<std::size_t>(grid_.size()) +
           static_cast<std::size_t>(k + grid_.size() / 2);
  }

  int m_;
  GridSpec grid_;
  double window_;
  std::vector<Complex> coeffs_;
};

/// Builds a lattice field from a trajectory recorded at uniform times 0, dt_rec, ...
/// covering [0, time_window). The number of samples in the window becomes M.
/// Throws ConfigError if the sampling does not tile the window or M is odd.
SpaceTimeField from_trajectory(const Trajectory& trajectory, double time_window);

}  // namespace cnls
