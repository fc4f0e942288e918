#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "pseudospec/diagnostics.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/spectral_ops.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec::diagnostics {
namespace {

std::vector<ShellSpectrum> shell_sum(const SpectralField& f, double factor) {
  const SpectralGrid& grid = f.grid();
  // Integer index wavenumbers per padded axis, with the Nyquist index at +N.
  std::array<std::vector<long>, 3> k;
  for (auto& axis : k) axis = {0};
  for (std::size_t d = 0; d < grid.rank(); ++d) {
    auto& axis = k[padded_axis(grid, d)];
    axis.resize(grid.spectral_extent(d));
    for (std::size_t i = 0; i < axis.size(); ++i) axis[i] = grid.wavenumber_index(d, i);
  }

  std::vector<double> bins;
  for_each_mode(grid, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
    const double r = std::sqrt(static_cast<double>(k[0][i0] * k[0][i0] + k[1][i1] * k[1][i1] +
                                                   k[2][i2] * k[2][i2]));
    const auto s = static_cast<std::size_t>(shell_index(r));
    if (s >= bins.size()) bins.resize(s + 1, 0.0);
    double power = 0.0;
    for (std::size_t c = 0; c < f.components(); ++c) power += std::norm(f.component(c)[idx]);
    bins[s] += factor * hermitian_weight(grid, i2) * power;
  });

  std::vector<ShellSpectrum> out(bins.size());
  for (std::size_t s = 0; s < bins.size(); ++s) out[s] = {static_cast<long>(s), bins[s]};
  return out;
}

}  // namespace

long shell_index(double radius) {
  if (!(radius >= 0.0)) throw DomainError("shell radius must be non-negative");
  return std::max(0L, static_cast<long>(std::ceil(radius - 0.5)));
}

std::vector<ShellSpectrum> energy_spectrum(const SpectralField& u_hat) { return shell_sum(u_hat, 0.5); }

std::vector<ShellSpectrum> enstrophy_spectrum(const SpectralField& omega_hat) {
  return shell_sum(omega_hat, 1.0);
}

double stretching_diagnostic(const PhysicalField& omega, const PhysicalField& u, const FourierFilter& filter) {
  const SpectralGrid& grid = omega.grid();
  if (grid.rank() != 3 || omega.components() != 3 || u.components() != 3 || !(u.grid() == grid))
    throw StructuralError("stretching diagnostic needs 3-component fields on one 3D grid");
  const double w_max = omega.max_norm();
  if (w_max == 0.0) return 0.0;

  const std::size_t n = grid.point_count();
  const auto wx = omega.component(0);
  const auto wy = omega.component(1);
  const auto wz = omega.component(2);
  std::vector<double> w2(n);
  for (std::size_t p = 0; p < n; ++p) w2[p] = wx[p] * wx[p] + wy[p] * wy[p] + wz[p] * wz[p];

  // s = sum_i omega_i (sum_j omega_j du_i/dx_j); xi_i = omega_i / |omega| applied at the end.
  std::vector<double> s(n, 0.0);
  const SpectralField u_hat = forward_transform(u);
  for (std::size_t j = 0; j < 3; ++j) {
    const PhysicalField grad = inverse_transform(spectral_derivative(u_hat, filter, j));
    const auto wj = omega.component(j);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto wi = omega.component(i);
      const auto g = grad.component(i);
      for (std::size_t p = 0; p < n; ++p) s[p] += wi[p] * g[p] * wj[p];
    }
  }

  const double cut = 1e-8 * w_max;
  double best = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    const double mag = std::sqrt(w2[p]);
    if (mag < cut) continue;
    best = std::max(best, std::abs(s[p]) / mag);
  }
  return best;
}

DiagnosticRecord compute_record(const euler::VorticityState& state, double dt_used) {
  const FourierFilter& filter = state.config.filter;
  const SpectralField omega_hat = forward_transform(state.omega);
  const SpectralField u_hat = euler::vorticity_to_velocity(omega_hat, filter);
  const PhysicalField u = inverse_transform(u_hat);
  const SpectralGrid& grid = state.omega.grid();

  DiagnosticRecord r;
  r.t = state.t;
  r.max_vorticity = state.omega.max_norm();
  r.max_velocity = u.max_norm();
  for (std::size_t c = 0; c < 3; ++c) {
    r.energy += 0.5 * spectral_energy(grid, u_hat.component(c));
    r.enstrophy += spectral_energy(grid, omega_hat.component(c));
  }
  r.stretching_inf = stretching_diagnostic(state.omega, u, filter);
  r.loglog_vorticity = r.max_vorticity > 1.0 ? std::log(std::log(r.max_vorticity))
                                             : std::numeric_limits<double>::quiet_NaN();
  r.dt_used = dt_used;
  return r;
}

GrowthTable growth_comparison(std::span<const GrowthSample> series, std::optional<double> c1,
                              std::optional<double> c2) {
  if (series.empty()) throw DomainError("growth comparison needs a non-empty series");
  GrowthTable table;
  if (!c1 || !c2) {
    const auto anchor = std::find_if(series.begin(), series.end(),
                                     [](const GrowthSample& s) { return s.max_vorticity > 1.0; });
    if (anchor == series.end())
      throw DomainError("growth comparison needs a sample with max vorticity above 1");
    const double w = anchor->max_vorticity;
    if (!c1) c1 = anchor->stretching / (w * std::log(w));
    if (!c2) c2 = anchor->stretching / (w * w);
  }
  table.c1 = *c1;
  table.c2 = *c2;
  table.rows.reserve(series.size());
  for (const GrowthSample& s : series) {
    const double w = s.max_vorticity;
    table.rows.push_back({s.t, s.stretching, table.c1 * w * std::log(w), table.c2 * w * w});
  }
  return table;
}

}  // namespace pseudospec::diagnostics
