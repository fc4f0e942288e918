#include <algorithm>
#include <cmath>
#include <numbers>

#include "pseudospec/errors.hpp"
#include "pseudospec/euler.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec::euler {

void TubeParams::validate(const SpectralGrid& grid) const {
  if (grid.rank() != 3) throw ConfigError("tube data needs a 3D grid");
  const double values[] = {core_radius, separation, peak_vorticity, perturbation_amplitude,
                           perturbation_wavelength, profile_exponent};
  for (double v : values)
    if (!std::isfinite(v)) throw ConfigError("tube parameters must be finite");
  if (!(core_radius > 0.0)) throw ConfigError("tube core radius must be positive");
  if (!(separation > core_radius)) throw ConfigError("tube separation must exceed the core radius");
  if (!(perturbation_amplitude >= 0.0) || !(perturbation_amplitude < core_radius))
    throw ConfigError("perturbation amplitude must lie in [0, core radius)");
  if (!(profile_exponent > 0.0)) throw ConfigError("profile exponent must be positive");
  if (!(perturbation_wavelength > 0.0)) throw ConfigError("perturbation wavelength must be positive");
  const double periods = grid.period(1) / perturbation_wavelength;
  if (std::abs(periods - std::round(periods)) > 1e-9)
    throw ConfigError("perturbation wavelength must divide the y period");
  const double reach = core_radius + perturbation_amplitude;
  if (reach >= 0.5 * grid.period(0)) throw ConfigError("tubes do not fit in x");
  if (separation + reach >= 0.5 * grid.period(2)) throw ConfigError("tubes do not fit in z");
}

double tube_profile(double q, double exponent) {
  if (!(q < 1.0)) return 0.0;
  const double q2 = q * q;
  return std::exp(-exponent * q2 / (1.0 - q2));
}

VorticityState make_tube_initial_data(const TubeParams& params, const SpectralGrid& grid,
                                      const SolverConfig& config) {
  params.validate(grid);
  config.validate();
  const double k = 2.0 * std::numbers::pi / params.perturbation_wavelength;
  const double a = params.perturbation_amplitude;
  const double r = params.core_radius;
  const double z0 = params.separation;
  const double peak = params.peak_vorticity;
  const double p = params.profile_exponent;

  PhysicalField omega = PhysicalField::sample_vector(
      grid, [&](std::span<const double> x, std::span<double, 3> w) {
        const double d = a * std::cos(k * x[1]);
        const double dd = -a * k * std::sin(k * x[1]);
        const double dx = x[0] - d;
        const double upper = tube_profile(std::hypot(dx, x[2] - (z0 - d)) / r, p);
        const double lower = tube_profile(std::hypot(dx, x[2] + (z0 - d)) / r, p);
        // Each tube's vorticity is tangent to its centerline, which keeps the
        // sampled field divergence-free up to discretization.
        w[0] = peak * dd * (upper - lower);
        w[1] = peak * (upper - lower);
        w[2] = -peak * dd * (upper + lower);
      });

  SpectralField omega_hat = forward_transform(omega);
  project_divergence_free(omega_hat);
  return {0.0, inverse_transform(omega_hat), config, 0};
}

double SymmetryResiduals::max() const {
  return std::max({dividing_plane, symmetry_x, symmetry_y, symmetry_z});
}

SymmetryResiduals symmetry_residuals(const PhysicalField& omega) {
  const SpectralGrid& grid = omega.grid();
  if (grid.rank() != 3 || omega.components() != 3)
    throw StructuralError("symmetry residuals need a 3-component field on a 3D grid");
  const std::size_t nx = grid.samples(0), ny = grid.samples(1), nz = grid.samples(2);
  const auto wx = omega.component(0);
  const auto wy = omega.component(1);
  const auto wz = omega.component(2);
  auto at = [&](std::size_t i, std::size_t j, std::size_t l) { return (i * ny + j) * nz + l; };

  SymmetryResiduals res;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t l = 0; l < nz; ++l) {
        const std::size_t p = at(i, j, l);
        const std::size_t mz = at(i, j, (nz - l) % nz);
        const std::size_t my = at(i, (ny - j) % ny, l);
        res.dividing_plane = std::max({res.dividing_plane, std::abs(wx[p] + wx[mz]),
                                       std::abs(wy[p] + wy[mz]), std::abs(wz[p] - wz[mz])});
        res.symmetry_x = std::max(res.symmetry_x, std::abs(wx[p] + wx[my]));
        res.symmetry_y = std::max(res.symmetry_y, std::abs(wy[p] - wy[my]));
        res.symmetry_z = std::max(res.symmetry_z, std::abs(wz[p] + wz[my]));
      }
  const double scale = omega.max_norm();
  if (scale > 0.0) {
    res.dividing_plane /= scale;
    res.symmetry_x /= scale;
    res.symmetry_y /= scale;
    res.symmetry_z /= scale;
  }
  return res;
}

}  // namespace pseudospec::euler
