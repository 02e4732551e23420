#pragma once

// Thin wrapper over FFTW. Plans are created once per (size, direction) under a
// lock; execution goes through the new-array interface, which FFTW documents
// as thread-safe.

#include <complex>
#include <span>

namespace cnls::detail {

enum class Direction { Forward, Backward };

/// Unnormalized 1-D DFT, out[m] = sum_j in[j] exp(-+ 2 pi i j m / n).
/// Forward uses the minus sign. `in` and `out` must not alias.
void dft(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
         Direction dir);

/// Unnormalized 2-D DFT on a row-major rows x cols array.
void dft2(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
          int rows, int cols, Direction dir);

}  // namespace cnls::detail
