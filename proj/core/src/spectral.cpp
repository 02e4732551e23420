#include "cnls/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cnls/errors.hpp"
#include "fft.hpp"

namespace cnls {
namespace {

// FFT order stores mode k at index k mod n.
std::size_t fft_slot(int k, int n) { return static_cast<std::size_t>(((k % n) + n) % n); }

}  // namespace

PeriodicField to_spectral(const GridSpec& grid, std::span<const Complex> values) {
  if (values.size() != static_cast<std::size_t>(grid.size())) {
    throw DimensionError("expected " + std::to_string(grid.size()) + " samples, got " +
                         std::to_string(values.size()));
  }
  return project(values, grid);
}

std::vector<Complex> to_physical(const PeriodicField& field) {
  return synthesize(field, field.grid().size());
}

std::vector<Complex> synthesize(const PeriodicField& field, int n_points) {
  const GridSpec& grid = field.grid();
  if (n_points < grid.size() || n_points % 2 != 0) {
    throw DimensionError("cannot synthesize " + std::to_string(grid.size()) + " modes on " +
                         std::to_string(n_points) + " points");
  }
  std::vector<Complex> spectrum(static_cast<std::size_t>(n_points));
  const auto coeffs = field.coeffs();
  for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
    spectrum[fft_slot(k, n_points)] = coeffs[static_cast<std::size_t>(k - grid.min_mode())];
  }
  std::vector<Complex> values(spectrum.size());
  detail::dft(spectrum, values, detail::Direction::Backward);
  return values;
}

PeriodicField project(std::span<const Complex> values, const GridSpec& grid) {
  const int n_points = static_cast<int>(values.size());
  if (n_points < grid.size()) {
    throw DimensionError("cannot project " + std::to_string(n_points) + " samples onto " +
                         std::to_string(grid.size()) + " modes");
  }
  std::vector<Complex> spectrum(values.size());
  detail::dft(values, spectrum, detail::Direction::Forward);
  const double scale = 1.0 / n_points;
  std::vector<Complex> coeffs(static_cast<std::size_t>(grid.size()));
  for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
    coeffs[static_cast<std::size_t>(k - grid.min_mode())] = spectrum[fft_slot(k, n_points)] * scale;
  }
  return PeriodicField(grid, std::move(coeffs));
}

double l2_norm(const PeriodicField& field) {
  double sum = 0.0;
  for (const Complex& c : field.coeffs()) sum += std::norm(c);
  return std::sqrt(kTwoPi * sum);
}

double hs_norm(const PeriodicField& field, SobolevIndex s) {
  const GridSpec& grid = field.grid();
  const auto coeffs = field.coeffs();
  double sum = 0.0;
  for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
    const double w = s.weight(k);
    sum += w * w * std::norm(coeffs[static_cast<std::size_t>(k - grid.min_mode())]);
  }
  return std::sqrt(sum);
}

Complex weak_pairing(const PeriodicField& field, int j) {
  const GridSpec& grid = field.grid();
  // The pairing is only defined for modes whose conjugate partner is also retained.
  if (std::abs(j) >= grid.size() / 2) {
    throw RangeError("pairing mode " + std::to_string(j) + " outside |j| < " +
                     std::to_string(grid.size() / 2));
  }
  return kTwoPi * field.coeff(j);
}

double lp_norm(const PeriodicField& field, int p) {
  if (p != 2 && p != 4) throw std::invalid_argument("lp_norm supports p = 2 or p = 4");
  const auto values = to_physical(field);
  double sum = 0.0;
  for (const Complex& v : values) {
    const double m = std::norm(v);
    sum += p == 2 ? m : m * m;
  }
  const double integral = kTwoPi / static_cast<double>(values.size()) * sum;
  return std::pow(integral, 1.0 / p);
}

double band_excess(const PeriodicField& field, int max_mode) {
  const GridSpec& grid = field.grid();
  double outside = 0.0;
  double total = 0.0;
  for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
    const double m = std::norm(field.coeff_or_zero(k));
    total += m;
    if (std::abs(k) > max_mode) outside += m;
  }
  return total == 0.0 ? 0.0 : std::sqrt(outside / total);
}

}  // namespace cnls
