#include "cnls/grid.hpp"

#include <string>

#include "cnls/errors.hpp"

namespace cnls {

GridSpec::GridSpec(int n_modes) : n_(n_modes) {
  if (n_modes < 4 || n_modes % 2 != 0) {
    throw ConfigError("grid size must be even and >= 4, got " + std::to_string(n_modes));
  }
}

std::size_t GridSpec::index_of(int k) const {
  if (!contains(k)) {
    throw RangeError("mode " + std::to_string(k) + " outside retained band [" +
                     std::to_string(min_mode()) + ", " + std::to_string(max_mode()) + "]");
  }
  return static_cast<std::size_t>(k + n_ / 2);
}

int GridSpec::mode_at(std::size_t index) const {
  if (index >= static_cast<std::size_t>(n_)) {
    throw RangeError("array index " + std::to_string(index) + " outside grid of size " +
                     std::to_string(n_));
  }
  return static_cast<int>(index) - n_ / 2;
}

}  // namespace cnls
