#pragma once

#include <span>
#include <vector>

#include "cnls/grid.hpp"
#include "cnls/periodic_field.hpp"

namespace cnls {

/// Trapezoidal realization of phi_hat(k) = (1/2pi) \int e^{-ikx} phi(x) dx from
/// samples at x_j = 2 pi j / N. Exact for band-limited input.
PeriodicField to_spectral(const GridSpec& grid, std::span<const Complex> values);

/// Samples u(x_j) = sum_k phi_hat(k) e^{ikx_j}.
std::vector<Complex> to_physical(const PeriodicField& field);

/// Samples of the field on a finer grid of `n_points` (even, >= N) points.
std::vector<Complex> synthesize(const PeriodicField& field, int n_points);

/// Fourier coefficients of samples on a grid of values.size() points, keeping
/// only the modes retained by `grid`. Inverse of synthesize() on band-limited data.
PeriodicField project(std::span<const Complex> values, const GridSpec& grid);

/// (\int |phi|^2)^{1/2} = (2 pi sum_k |phi_hat(k)|^2)^{1/2}.
double l2_norm(const PeriodicField& field);

/// (sum_k <k>^{2s} |phi_hat(k)|^2)^{1/2}. Plain l2 of weighted coefficients,
/// so hs_norm(f, {0}) == l2_norm(f) / sqrt(2 pi).
double hs_norm(const PeriodicField& field, SobolevIndex s);

/// (u, e^{ijx})_{L^2} = 2 pi u_hat(j). RangeError when j is not retained.
Complex weak_pairing(const PeriodicField& field, int j);

/// (2pi/N sum_j |u(x_j)|^p)^{1/p} for p in {2, 4}.
///
/// p = 4 is exact only for fields supported in |k| < N/4; wider fields alias.
double lp_norm(const PeriodicField& field, int p = 4);

/// Relative l2 mass carried by modes with |k| > max_mode.
double band_excess(const PeriodicField& field, int max_mode);

}  // namespace cnls
