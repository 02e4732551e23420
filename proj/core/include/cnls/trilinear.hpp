#pragma once

#include <functional>

#include "cnls/periodic_field.hpp"

namespace cnls {

/// Whether trilinear products insist on inputs supported in |k| <= N/4.
///
/// The 2N zero-padded product is alias-free on the retained band for any
/// input, so the time stepper disables the check; the public default keeps it.
enum class BandCheck { QuarterBand, None };

/// Predicate on (k1, k2, k3), where k1 indexes the coefficients of conj(u).
using ResonanceMask = std::function<bool(int k1, int k2, int k3)>;

/// (k1 + k2)(k1 + k3) != 0: the triples kept by Lambda_1.
bool nonresonant_triple(int k1, int k2, int k3);

/// Coefficients of conj(u) v w on the retained band, computed on a 2N grid.
PeriodicField g_full(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w,
                     BandCheck check = BandCheck::QuarterBand);

/// Diagonal case |u|^2 u with a single synthesis.
PeriodicField g_full(const PeriodicField& u, BandCheck check = BandCheck::QuarterBand);

/// (1/pi) ||u||_{L^2}^2 u: the two resonant sums with k2 = -k1 or k3 = -k1.
PeriodicField resonant_part(const PeriodicField& u);

/// Mode m carries -conj(u_hat(m)) v_hat(m) w_hat(m).
PeriodicField lambda2(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w);

/// g_full with every triple satisfying (k1+k2)(k1+k3) = 0 removed.
///
/// Computed by subtraction: g minus the k2 = -k1 sum, minus the k3 = -k1 sum,
/// plus the doubly removed diagonal k2 = k3 = -k1.
PeriodicField lambda1(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w,
                      BandCheck check = BandCheck::QuarterBand);

/// Brute-force triple sum of conj(u) v w restricted to `mask`, truncated to
/// the retained band. O(N^3); SizeGuardError above N = 64.
PeriodicField g_oracle(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w,
                       const ResonanceMask& mask);

inline constexpr int kOracleMaxModes = 64;

struct TrilinearResult {
  PeriodicField resonant;
  PeriodicField lambda1;
  PeriodicField lambda2;
  PeriodicField total;
};

/// |u|^2 u split into resonant mass term, Lambda_1 and Lambda_2.
TrilinearResult decompose(const PeriodicField& u, BandCheck check = BandCheck::QuarterBand);

}  // namespace cnls
