#pragma once

#include <filesystem>
#include <iosfwd>

#include "cnls/integrator.hpp"

namespace cnls {

/// Columnar text format for trajectories.
///
///     # cnls-trajectory v1
///     # n_modes=<N>
///     # equation=<cubic-nls|limit-pde>
///     # gamma=<g>  alpha_sq=<a>  dt=<dt>  t_end=<T>  record_every=<r>   (one key per line)
///     t,re(-N/2),im(-N/2),...,re(N/2-1),im(N/2-1)
///     <one row per recorded time>
///
/// Values use the shortest decimal form that round-trips, so write/read is lossless.
void write_trajectory(std::ostream& out, const Trajectory& trajectory);
void write_trajectory(const std::filesystem::path& path, const Trajectory& trajectory);

/// Throws FormatError on malformed input.
Trajectory read_trajectory(std::istream& in);
Trajectory read_trajectory(const std::filesystem::path& path);

}  // namespace cnls
