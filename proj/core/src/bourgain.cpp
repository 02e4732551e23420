#include "cnls/bourgain.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cnls/errors.hpp"
#include "cnls/integrator.hpp"
#include "cnls/spectral.hpp"
#include "cnls/trilinear.hpp"

namespace cnls {

double BourgainIndex::weight(double omega, int k) const noexcept {
  const double kk = static_cast<double>(k) * k;
  const double modulation = variant == Dispersion::Plus ? omega + kk : omega - kk;
  return std::pow(1.0 + modulation * modulation, 0.5 * b) * std::pow(1.0 + kk, 0.5 * s);
}

double xbs_norm(const SpaceTimeField& field, BourgainIndex index) {
  const GridSpec& grid = field.grid();
  double sum = 0.0;
  for (int q = field.min_time_mode(); q <= field.max_time_mode(); ++q) {
    const double omega = field.frequency(q);
    for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
      const double w = index.weight(omega, k);
      sum += w * w * std::norm(field.coeff(q, k));
    }
  }
  return std::sqrt(sum);
}

std::int64_t dispersion_mismatch(std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                 std::int64_t q1, std::int64_t q2, std::int64_t q3) {
  const std::int64_t k = k1 + k2 + k3;
  const std::int64_t q = q1 + q2 + q3;
  const std::int64_t sigma = q + k * k;
  const std::int64_t sigma1 = q1 - k1 * k1;
  const std::int64_t sigma2 = q2 + k2 * k2;
  const std::int64_t sigma3 = q3 + k3 * k3;
  return sigma - sigma1 - sigma2 - sigma3;
}

std::int64_t resonance_defect(std::int64_t k1, std::int64_t k2, std::int64_t k3,
                              std::int64_t q1, std::int64_t q2, std::int64_t q3) {
  return dispersion_mismatch(k1, k2, k3, q1, q2, q3) - 2 * (k1 + k2) * (k1 + k3);
}

double l4_norm(const SpaceTimeField& field) {
  const SpaceTimeField fine = field.padded(2 * field.m_times(), 2 * field.grid().size());
  double sum = 0.0;
  for (const Complex& v : fine.to_samples()) {
    const double m = std::norm(v);
    sum += m * m;
  }
  const double cell = field.time_window() / fine.m_times() * kTwoPi / fine.grid().size();
  return std::pow(sum * cell, 0.25);
}

double l4_ratio(const SpaceTimeField& field) {
  const double denom = xbs_norm(field, {3.0 / 8.0, 0.0, Dispersion::Plus});
  if (denom == 0.0) throw DegenerateInput("l4_ratio of the zero field");
  return l4_norm(field) / denom;
}

std::string_view to_string(TrilinearPiece piece) noexcept {
  return piece == TrilinearPiece::Lambda1 ? "lambda1" : "lambda2";
}

SpaceTimeField apply_trilinear(const SpaceTimeField& u, const SpaceTimeField& v,
                               const SpaceTimeField& w, TrilinearPiece piece) {
  for (const SpaceTimeField* f : {&v, &w}) {
    if (f->m_times() != u.m_times() || !(f->grid() == u.grid()) ||
        f->time_window() != u.time_window()) {
      throw GridMismatch("trilinear inputs on different lattices");
    }
  }
  const int m_out = 4 * u.m_times();
  const int n_out = 4 * u.grid().size();
  const auto su = u.padded(u.m_times(), n_out).time_slices(m_out);
  const auto sv = v.padded(v.m_times(), n_out).time_slices(m_out);
  const auto sw = w.padded(w.m_times(), n_out).time_slices(m_out);
  std::vector<PeriodicField> out;
  out.reserve(su.size());
  for (std::size_t i = 0; i < su.size(); ++i) {
    out.push_back(piece == TrilinearPiece::Lambda1 ? lambda1(su[i], sv[i], sw[i])
                                                   : lambda2(su[i], sv[i], sw[i]));
  }
  return SpaceTimeField::from_time_slices(out, u.time_window());
}

double lambda_ratio(const SpaceTimeField& u, const SpaceTimeField& v, const SpaceTimeField& w,
                    TrilinearPiece piece, BourgainIndex in_index, BourgainIndex out_index) {
  const double denom = xbs_norm(u, in_index) * xbs_norm(v, in_index) * xbs_norm(w, in_index);
  if (denom == 0.0) throw DegenerateInput("lambda_ratio with a zero input");
  return xbs_norm(apply_trilinear(u, v, w, piece), out_index) / denom;
}

double zygmund_ratio(const PeriodicField& phi, double t_small, int time_intervals) {
  if (!(t_small > 0.0 && t_small < 1.0)) throw ConfigError("zygmund_ratio needs 0 < T < 1");
  if (time_intervals < 2 || time_intervals % 2 != 0) {
    throw ConfigError("Simpson rule needs an even number of panels");
  }
  const double mass = l2_norm(phi);
  if (mass == 0.0) throw DegenerateInput("zygmund_ratio of the zero field");

  const int n_points = 2 * phi.grid().size();
  const double dx = kTwoPi / n_points;
  const double h = 2.0 * t_small / time_intervals;
  double integral = 0.0;
  for (int i = 0; i <= time_intervals; ++i) {
    const double t = -t_small + i * h;
    double slice = 0.0;
    for (const Complex& z : synthesize(free_evolution(phi, t), n_points)) {
      const double m = std::norm(z);
      slice += m * m;
    }
    const double simpson = (i == 0 || i == time_intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    integral += simpson * slice * dx;
  }
  integral *= h / 3.0;
  return std::pow(integral, 0.25) / (std::pow(t_small, 0.125) * mass);
}

}  // namespace cnls
