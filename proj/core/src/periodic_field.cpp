#include "cnls/periodic_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cnls/errors.hpp"

namespace cnls {

PeriodicField::PeriodicField(GridSpec grid)
    : grid_(grid), coeffs_(static_cast<std::size_t>(grid.size())) {}

PeriodicField::PeriodicField(GridSpec grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(grid_.size())) {
    throw DimensionError("expected " + std::to_string(grid_.size()) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
  }
}

PeriodicField PeriodicField::from_modes(GridSpec grid,
                                        std::initializer_list<std::pair<int, Complex>> modes) {
  return from_modes(grid, std::span<const std::pair<int, Complex>>(modes.begin(), modes.size()));
}

PeriodicField PeriodicField::from_modes(GridSpec grid,
                                        std::span<const std::pair<int, Complex>> modes) {
  std::vector<Complex> c(static_cast<std::size_t>(grid.size()));
  for (const auto& [k, value] : modes) c[grid.index_of(k)] += value;
  return PeriodicField(grid, std::move(c));
}

int PeriodicField::bandwidth() const noexcept {
  int widest = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != Complex{}) {
      const int k = static_cast<int>(i) + grid_.min_mode();
      widest = std::max(widest, std::abs(k));
    }
  }
  return widest;
}

PeriodicField PeriodicField::resampled(int n_modes, bool truncate) const {
  GridSpec target(n_modes);
  std::vector<Complex> c(static_cast<std::size_t>(n_modes));
  for (int k = grid_.min_mode(); k <= grid_.max_mode(); ++k) {
    const Complex value = coeffs_[static_cast<std::size_t>(k - grid_.min_mode())];
    if (target.contains(k)) {
      c[target.index_of(k)] = value;
    } else if (value != Complex{} && !truncate) {
      throw BandError("mode " + std::to_string(k) + " is nonzero and does not fit a grid of " +
                      std::to_string(n_modes));
    }
  }
  return PeriodicField(target, std::move(c));
}

void PeriodicField::require_same_grid(const PeriodicField& other) const {
  if (!(grid_ == other.grid_)) {
    throw GridMismatch("fields live on grids of size " + std::to_string(grid_.size()) + " and " +
                       std::to_string(other.grid_.size()));
  }
}

PeriodicField& PeriodicField::operator+=(const PeriodicField& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PeriodicField& PeriodicField::operator-=(const PeriodicField& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PeriodicField& PeriodicField::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

}  // namespace cnls
