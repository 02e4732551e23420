#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "cnls/grid.hpp"

namespace cnls {

/// Fourier coefficients phi_hat(k) of a function on the circle, with
/// phi_hat(k) = (1/2pi) \int e^{-ikx} phi(x) dx.
///
/// Immutable once built; arithmetic returns new fields.
class PeriodicField {
 public:
  /// The zero field.
  explicit PeriodicField(GridSpec grid);
  /// Coefficients in centered order. Throws DimensionError on length mismatch.
  PeriodicField(GridSpec grid, std::vector<Complex> coeffs);

  /// Sparse construction from (mode, coefficient) pairs.
  static PeriodicField from_modes(GridSpec grid,
                                  std::initializer_list<std::pair<int, Complex>> modes);
  static PeriodicField from_modes(GridSpec grid, std::span<const std::pair<int, Complex>> modes);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of mode k; RangeError outside the band.
  Complex coeff(int k) const { return coeffs_[grid_.index_of(k)]; }
  /// Same as coeff() but returns zero for modes outside the band.
  Complex coeff_or_zero(int k) const noexcept {
    return grid_.contains(k) ? coeffs_[static_cast<std::size_t>(k - grid_.min_mode())] : Complex{};
  }

  /// Largest |k| carrying a nonzero coefficient; -1 for the zero field.
  int bandwidth() const noexcept;

  /// Same field on a grid with `n_modes` modes; lost modes must be zero
  /// unless `truncate` is set.
  PeriodicField resampled(int n_modes, bool truncate = false) const;

  PeriodicField& operator+=(const PeriodicField& other);
  PeriodicField& operator-=(const PeriodicField& other);
  PeriodicField& operator*=(Complex scale);

  friend PeriodicField operator+(PeriodicField a, const PeriodicField& b) { return a += b; }
  friend PeriodicField operator-(PeriodicField a, const PeriodicField& b) { return a -= b; }
  friend PeriodicField operator*(PeriodicField a, Complex c) { return a *= c; }
  friend PeriodicField operator*(Complex c, PeriodicField a) { return a *= c; }
  friend PeriodicField operator-(PeriodicField a) { return a *= -1.0; }

 private:
  void require_same_grid(const PeriodicField& other) const;

  GridSpec grid_;
  std::vector<Complex> coeffs_;
};

}  // namespace cnls
