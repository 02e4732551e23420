#include "cnls/space_time.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnls/errors.hpp"
#include "cnls/spectral.hpp"
#include "fft.hpp"

namespace cnls {
namespace {

std::size_t fft_slot(int k, int n) { return static_cast<std::size_t>(((k % n) + n) % n); }

void require_lattice(int m_times, double window) {
  if (m_times < 2 || m_times % 2 != 0) {
    throw ConfigError("time lattice size must be even and >= 2, got " + std::to_string(m_times));
  }
  if (!(window > 0.0) || !std::isfinite(window)) throw ConfigError("time window must be positive");
}

}  // namespace

SpaceTimeField::SpaceTimeField(int m_times, GridSpec grid, double time_window)
    : m_(m_times), grid_(grid), window_(time_window) {
  require_lattice(m_times, time_window);
  coeffs_.resize(static_cast<std::size_t>(m_) * static_cast<std::size_t>(grid_.size()));
}

SpaceTimeField::SpaceTimeField(int m_times, GridSpec grid, double time_window,
                               std::vector<Complex> coeffs)
    : m_(m_times), grid_(grid), window_(time_window), coeffs_(std::move(coeffs)) {
  require_lattice(m_times, time_window);
  if (coeffs_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(grid_.size())) {
    throw DimensionError("space-time coefficient array must be M x N");
  }
}

SpaceTimeField SpaceTimeField::from_samples(int m_times, GridSpec grid, double time_window,
                                            std::span<const Complex> values) {
  const int n = grid.size();
  if (values.size() != static_cast<std::size_t>(m_times) * static_cast<std::size_t>(n)) {
    throw DimensionError("space-time samples must be M x N");
  }
  std::vector<Complex> spectrum(values.size());
  detail::dft2(values, spectrum, m_times, n, detail::Direction::Forward);
  SpaceTimeField out(m_times, grid, time_window);
  const double scale = 1.0 / (static_cast<double>(m_times) * n);
  for (int q = out.min_time_mode(); q <= out.max_time_mode(); ++q) {
    for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
      out.coeffs_[out.index(q, k)] =
          spectrum[fft_slot(q, m_times) * static_cast<std::size_t>(n) + fft_slot(k, n)] * scale;
    }
  }
  return out;
}

std::vector<Complex> SpaceTimeField::to_samples() const {
  const int n = grid_.size();
  std::vector<Complex> spectrum(coeffs_.size());
  for (int q = min_time_mode(); q <= max_time_mode(); ++q) {
    for (int k = grid_.min_mode(); k <= grid_.max_mode(); ++k) {
      spectrum[fft_slot(q, m_) * static_cast<std::size_t>(n) + fft_slot(k, n)] = coeffs_[index(q, k)];
    }
  }
  std::vector<Complex> values(spectrum.size());
  detail::dft2(spectrum, values, m_, n, detail::Direction::Backward);
  return values;
}

std::vector<PeriodicField> SpaceTimeField::time_slices(int n_times) const {
  if (n_times < m_ || n_times % 2 != 0) {
    throw DimensionError("time slices need an even count >= M");
  }
  const int n = grid_.size();
  std::vector<std::vector<Complex>> slices(static_cast<std::size_t>(n_times),
                                           std::vector<Complex>(static_cast<std::size_t>(n)));
  std::vector<Complex> column(static_cast<std::size_t>(n_times));
  std::vector<Complex> values(column.size());
  for (int k = grid_.min_mode(); k <= grid_.max_mode(); ++k) {
    std::fill(column.begin(), column.end(), Complex{});
    for (int q = min_time_mode(); q <= max_time_mode(); ++q) {
      column[fft_slot(q, n_times)] = coeffs_[index(q, k)];
    }
    detail::dft(column, values, detail::Direction::Backward);
    for (int i = 0; i < n_times; ++i) slices[static_cast<std::size_t>(i)][grid_.index_of(k)] = values[static_cast<std::size_t>(i)];
  }
  std::vector<PeriodicField> out;
  out.reserve(slices.size());
  for (auto& s : slices) out.emplace_back(grid_, std::move(s));
  return out;
}

SpaceTimeField SpaceTimeField::from_time_slices(std::span<const PeriodicField> slices,
                                                double time_window) {
  if (slices.empty()) throw DimensionError("no time slices");
  const int m = static_cast<int>(slices.size());
  const GridSpec grid = slices.front().grid();
  SpaceTimeField out(m, grid, time_window);
  std::vector<Complex> column(static_cast<std::size_t>(m));
  std::vector<Complex> spectrum(column.size());
  for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
    for (int i = 0; i < m; ++i) {
      const auto& slice = slices[static_cast<std::size_t>(i)];
      if (!(slice.grid() == grid)) throw GridMismatch("time slices on different grids");
      column[static_cast<std::size_t>(i)] = slice.coeff(k);
    }
    detail::dft(column, spectrum, detail::Direction::Forward);
    for (int q = out.min_time_mode(); q <= out.max_time_mode(); ++q) {
      out.coeffs_[out.index(q, k)] = spectrum[fft_slot(q, m)] / static_cast<double>(m);
    }
  }
  return out;
}

Complex SpaceTimeField::coeff(int q, int k) const {
  if (q < min_time_mode() || q > max_time_mode() || !grid_.contains(k)) {
    throw RangeError("lattice mode (" + std::to_string(q) + ", " + std::to_string(k) +
                     ") outside retained band");
  }
  return coeffs_[index(q, k)];
}

Complex SpaceTimeField::coeff_or_zero(int q, int k) const noexcept {
  if (q < min_time_mode() || q > max_time_mode() || !grid_.contains(k)) return {};
  return coeffs_[index(q, k)];
}

SpaceTimeField SpaceTimeField::padded(int m_times, int n_modes) const {
  if (m_times < m_ || n_modes < grid_.size()) throw DimensionError("padding cannot shrink a lattice");
  SpaceTimeField out(m_times, GridSpec(n_modes), window_);
  for (int q = min_time_mode(); q <= max_time_mode(); ++q) {
    for (int k = grid_.min_mode(); k <= grid_.max_mode(); ++k) {
      out.coeffs_[out.index(q, k)] = coeffs_[index(q, k)];
    }
  }
  return out;
}

SpaceTimeField SpaceTimeField::conjugate() const {
  SpaceTimeField out(m_, grid_, window_);
  const int n = grid_.size();
  for (int q = min_time_mode(); q <= max_time_mode(); ++q) {
    for (int k = grid_.min_mode(); k <= grid_.max_mode(); ++k) {
      // Reflect and wrap back into the centered band.
      int rq = -q;
      int rk = -k;
      if (rq > max_time_mode()) rq -= m_;
      if (rk > grid_.max_mode()) rk -= n;
      out.coeffs_[out.index(q, k)] = std::conj(coeffs_[index(rq, rk)]);
    }
  }
  return out;
}

SpaceTimeField& SpaceTimeField::operator+=(const SpaceTimeField& other) {
  if (other.m_ != m_ || !(other.grid_ == grid_) || other.window_ != window_) {
    throw GridMismatch("space-time fields on different lattices");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpaceTimeField& SpaceTimeField::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

SpaceTimeField from_trajectory(const Trajectory& trajectory, double time_window) {
  const auto& times = trajectory.times;
  if (times.size() < 3) throw ConfigError("trajectory too short for a space-time transform");
  const double spacing = times[1] - times[0];
  if (!(spacing > 0.0)) throw ConfigError("trajectory times must increase");
  const double ratio = time_window / spacing;
  const long m = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(m)) > 1e-6 * ratio) {
    throw ConfigError("recording interval does not tile the time window");
  }
  if (m % 2 != 0) throw ConfigError("time window holds an odd number of samples");
  if (static_cast<long>(times.size()) < m) throw ConfigError("trajectory shorter than the time window");
  for (long i = 0; i < m; ++i) {
    const double expected = times[0] + static_cast<double>(i) * spacing;
    if (std::abs(times[static_cast<std::size_t>(i)] - expected) > 1e-9 * std::max(1.0, time_window)) {
      throw ConfigError("trajectory sampling is not uniform");
    }
  }
  std::vector<PeriodicField> slices(trajectory.states.begin(), trajectory.states.begin() + m);
  return SpaceTimeField::from_time_slices(slices, time_window);
}

}  // namespace cnls
