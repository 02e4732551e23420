#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

namespace cnls {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Uniform discretization of the circle R/2piZ.
///
/// Retains the N modes k = -N/2 .. N/2-1. Coefficient arrays are stored in
/// centered order, i.e. mode k lives at index k + N/2. Collocation points are
/// x_j = 2 pi j / N.
class GridSpec {
 public:
  /// Throws ConfigError unless n_modes is even and at least 4.
  explicit GridSpec(int n_modes);

  int size() const noexcept { return n_; }
  int min_mode() const noexcept { return -n_ / 2; }
  int max_mode() const noexcept { return n_ / 2 - 1; }
  bool contains(int k) const noexcept { return k >= min_mode() && k <= max_mode(); }

  /// Centered array index of mode k. Throws RangeError outside the band.
  std::size_t index_of(int k) const;
  int mode_at(std::size_t index) const;

  double point(int j) const noexcept { return kTwoPi * j / n_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int n_;
};

/// Japanese bracket <x> = (1 + x^2)^{1/2}.
inline double bracket(double x) noexcept { return std::sqrt(1.0 + x * x); }

/// Sobolev exponent s with weight <k>^s.
struct SobolevIndex {
  double s = 0.0;

  double weight(double k) const noexcept { return std::pow(1.0 + k * k, 0.5 * s); }
};

}  // namespace cnls
