#include "cnls/trilinear.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "cnls/errors.hpp"
#include "cnls/spectral.hpp"

namespace cnls {
namespace {

void require_same_grid(const PeriodicField& a, const PeriodicField& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch("trilinear operands on grids of size " + std::to_string(a.grid().size()) +
                       " and " + std::to_string(b.grid().size()));
  }
}

void require_quarter_band(const PeriodicField& f, BandCheck check) {
  if (check == BandCheck::None) return;
  const int limit = f.grid().size() / 4;
  if (f.bandwidth() > limit) {
    throw BandError("trilinear input has content at |k| = " + std::to_string(f.bandwidth()) +
                    " beyond N/4 = " + std::to_string(limit));
  }
}

// sum_k conj(a_hat(k)) b_hat(k)
Complex coefficient_product(const PeriodicField& a, const PeriodicField& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  Complex sum{};
  for (std::size_t i = 0; i < ca.size(); ++i) sum += std::conj(ca[i]) * cb[i];
  return sum;
}

}  // namespace

bool nonresonant_triple(int k1, int k2, int k3) {
  return static_cast<long long>(k1 + k2) * (k1 + k3) != 0;
}

PeriodicField g_full(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w,
                     BandCheck check) {
  require_same_grid(u, v);
  require_same_grid(u, w);
  require_quarter_band(u, check);
  require_quarter_band(v, check);
  require_quarter_band(w, check);

  const int padded = 2 * u.grid().size();
  const auto pu = synthesize(u, padded);
  const auto pv = synthesize(v, padded);
  const auto pw = synthesize(w, padded);
  std::vector<Complex> product(pu.size());
  for (std::size_t j = 0; j < product.size(); ++j) product[j] = std::conj(pu[j]) * pv[j] * pw[j];
  return project(product, u.grid());
}

PeriodicField g_full(const PeriodicField& u, BandCheck check) {
  require_quarter_band(u, check);
  auto values = synthesize(u, 2 * u.grid().size());
  for (Complex& z : values) z *= std::norm(z);
  return project(values, u.grid());
}

PeriodicField resonant_part(const PeriodicField& u) {
  const double mass = l2_norm(u);
  return u * Complex(mass * mass / kPi);
}

PeriodicField lambda2(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w) {
  require_same_grid(u, v);
  require_same_grid(u, w);
  const auto cu = u.coeffs();
  const auto cv = v.coeffs();
  const auto cw = w.coeffs();
  std::vector<Complex> out(cu.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -std::conj(cu[i]) * cv[i] * cw[i];
  return PeriodicField(u.grid(), std::move(out));
}

PeriodicField lambda1(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w,
                      BandCheck check) {
  PeriodicField out = g_full(u, v, w, check);
  out -= w * coefficient_product(u, v);
  out -= v * coefficient_product(u, w);
  out -= lambda2(u, v, w);
  return out;
}

PeriodicField g_oracle(const PeriodicField& u, const PeriodicField& v, const PeriodicField& w,
                       const ResonanceMask& mask) {
  require_same_grid(u, v);
  require_same_grid(u, w);
  const GridSpec& grid = u.grid();
  if (grid.size() > kOracleMaxModes) {
    throw SizeGuardError("triple-sum oracle limited to N <= " + std::to_string(kOracleMaxModes) +
                         ", got " + std::to_string(grid.size()));
  }
  std::vector<Complex> out(static_cast<std::size_t>(grid.size()));
  // conj(u) has coefficient conj(u_hat(-k1)) at mode k1.
  for (int k1 = -grid.max_mode(); k1 <= -grid.min_mode(); ++k1) {
    const Complex a = std::conj(u.coeff_or_zero(-k1));
    if (a == Complex{}) continue;
    for (int k2 = grid.min_mode(); k2 <= grid.max_mode(); ++k2) {
      const Complex ab = a * v.coeff(k2);
      if (ab == Complex{}) continue;
      for (int k3 = grid.min_mode(); k3 <= grid.max_mode(); ++k3) {
        const int m = k1 + k2 + k3;
        if (!grid.contains(m) || !mask(k1, k2, k3)) continue;
        out[grid.index_of(m)] += ab * w.coeff(k3);
      }
    }
  }
  return PeriodicField(grid, std::move(out));
}

TrilinearResult decompose(const PeriodicField& u, BandCheck check) {
  PeriodicField total = g_full(u, check);
  PeriodicField resonant = resonant_part(u);
  PeriodicField diag = lambda2(u, u, u);
  PeriodicField rest = total - resonant - diag;
  return TrilinearResult{std::move(resonant), std::move(rest), std::move(diag), std::move(total)};
}

}  // namespace cnls
