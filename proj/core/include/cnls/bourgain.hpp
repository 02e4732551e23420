#pragma once

#include <cstdint>
#include <string_view>

#include "cnls/periodic_field.hpp"
#include "cnls/space_time.hpp"

namespace cnls {

/// Which dispersion weight a Bourgain norm uses: <q + k^2> or <q - k^2>.
enum class Dispersion { Plus, Minus };

struct BourgainIndex {
  double b = 0.0;
  double s = 0.0;
  Dispersion variant = Dispersion::Plus;

  /// <omega +- k^2>^b <k>^s for angular time frequency omega.
  double weight(double omega, int k) const noexcept;
};

/// ||<q +- k^2>^b <k>^s u_hat||_{l^2} over the lattice.
double xbs_norm(const SpaceTimeField& field, BourgainIndex index);

/// sigma - sigma~_1 - sigma_2 - sigma_3 with sigma = q + k^2, sigma~_1 = q1 - k1^2,
/// sigma_i = q_i + k_i^2, q = q1 + q2 + q3 and k = k1 + k2 + k3.
std::int64_t dispersion_mismatch(std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                 std::int64_t q1, std::int64_t q2, std::int64_t q3);

/// dispersion_mismatch(...) - 2 (k1 + k2)(k1 + k3). Identically zero.
std::int64_t resonance_defect(std::int64_t k1, std::int64_t k2, std::int64_t k3,
                              std::int64_t q1, std::int64_t q2, std::int64_t q3);

/// (\int\int |v|^4 dt dx)^{1/4} over [0, T_w) x [0, 2pi). Evaluated on a lattice
/// padded by two in each axis, which makes the quadrature exact.
double l4_norm(const SpaceTimeField& field);

/// ||v||_{L^4} / ||v||_{X^{3/8,0}}. DegenerateInput for the zero field.
double l4_ratio(const SpaceTimeField& field);

enum class TrilinearPiece { Lambda1, Lambda2 };
std::string_view to_string(TrilinearPiece piece) noexcept;

/// Lambda_i(u, v, w) applied in space at every time. The result lives on a
/// (4M, 4N) lattice, large enough to hold the full product without aliasing.
SpaceTimeField apply_trilinear(const SpaceTimeField& u, const SpaceTimeField& v,
                               const SpaceTimeField& w, TrilinearPiece piece);

/// ||Lambda_i(u,v,w)||_{out} / (||u||_{in} ||v||_{in} ||w||_{in}).
double lambda_ratio(const SpaceTimeField& u, const SpaceTimeField& v, const SpaceTimeField& w,
                    TrilinearPiece piece, BourgainIndex in_index, BourgainIndex out_index);

/// Input/output index pairs for the multilinear bounds.
struct LambdaPreset {
  std::string_view name;
  BourgainIndex in;
  BourgainIndex out;
};

namespace presets {
/// X^{1/2,0} cubed into X^{-7/16,0}.
inline constexpr LambdaPreset kEnergy{"energy", {0.5, 0.0}, {-7.0 / 16.0, 0.0}};
/// X^{3/8,-1/3} cubed into X^{-7/16,-1}; the diagonal-piece bound.
inline constexpr LambdaPreset kDiagonal{"diagonal", {3.0 / 8.0, -1.0 / 3.0}, {-7.0 / 16.0, -1.0}};
/// X^{7/16,-1/48} cubed into X^{-7/16,-1}; the non-resonant-piece bound.
inline constexpr LambdaPreset kNonresonant{"nonresonant", {7.0 / 16.0, -1.0 / 48.0}, {-7.0 / 16.0, -1.0}};
}  // namespace presets

/// ||V(t) phi||_{L^4(]-T,T[ x T)} / (T^{1/8} ||phi||_{L^2}) for 0 < T < 1.
///
/// Space integral is exact (2N-point quadrature); time integral is composite
/// Simpson with `time_intervals` (even) panels.
double zygmund_ratio(const PeriodicField& phi, double t_small, int time_intervals = 4096);

}  // namespace cnls
