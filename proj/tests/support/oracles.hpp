#pragma once

// Reference computations used by the tests. They deliberately avoid the
// library's transform and derivative code paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "pseudospec/field.hpp"
#include "pseudospec/spectral_ops.hpp"

namespace oracle {

using pseudospec::Complex;
using pseudospec::PhysicalField;
using pseudospec::SpectralGrid;

// Direct O(n^2) sum u_hat_k = (1/n) sum_j u(x_j) exp(-i k.x_j) over the stored
// half spectrum, with x_j taken from the grid coordinates.
inline std::vector<Complex> naive_forward(const SpectralGrid& grid, std::span<const double> u) {
  const auto samples = grid.padded_samples();
  const auto extent = grid.padded_spectral_extents();
  const std::size_t off = pseudospec::SpectralGrid::kMaxRank - grid.rank();
  auto coord = [&](std::size_t a, std::size_t j) { return a < off ? 0.0 : grid.coordinate(a - off, j); };
  auto kappa = [&](std::size_t a, std::size_t i) { return a < off ? 0.0 : grid.wavenumber(a - off, i); };

  std::vector<Complex> out;
  const double norm = 1.0 / static_cast<double>(grid.point_count());
  for (std::size_t i0 = 0; i0 < extent[0]; ++i0)
    for (std::size_t i1 = 0; i1 < extent[1]; ++i1)
      for (std::size_t i2 = 0; i2 < extent[2]; ++i2) {
        Complex sum = 0.0;
        std::size_t p = 0;
        for (std::size_t j0 = 0; j0 < samples[0]; ++j0)
          for (std::size_t j1 = 0; j1 < samples[1]; ++j1)
            for (std::size_t j2 = 0; j2 < samples[2]; ++j2, ++p) {
              const double phase = kappa(0, i0) * coord(0, j0) + kappa(1, i1) * coord(1, j1) +
                                   kappa(2, i2) * coord(2, j2);
              sum += u[p] * std::polar(1.0, -phase);
            }
        out.push_back(sum * norm);
      }
  return out;
}

// Eighth-order central difference along grid axis `axis` of one component.
inline std::vector<double> fd_derivative(const SpectralGrid& grid, std::span<const double> u, std::size_t axis) {
  static constexpr double c[] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  const auto samples = grid.padded_samples();
  const std::size_t a = axis + pseudospec::SpectralGrid::kMaxRank - grid.rank();
  const double h = grid.spacing(axis);
  std::vector<double> out(u.size());
  std::size_t p = 0;
  for (std::size_t j0 = 0; j0 < samples[0]; ++j0)
    for (std::size_t j1 = 0; j1 < samples[1]; ++j1)
      for (std::size_t j2 = 0; j2 < samples[2]; ++j2, ++p) {
        const std::size_t j[3] = {j0, j1, j2};
        double d = 0.0;
        for (int s = 1; s <= 4; ++s) {
          std::size_t jp[3] = {j0, j1, j2};
          std::size_t jm[3] = {j0, j1, j2};
          jp[a] = (j[a] + s) % samples[a];
          jm[a] = (j[a] + samples[a] - s) % samples[a];
          const std::size_t ip = (jp[0] * samples[1] + jp[1]) * samples[2] + jp[2];
          const std::size_t im = (jm[0] * samples[1] + jm[1]) * samples[2] + jm[2];
          d += c[s - 1] * (u[ip] - u[im]);
        }
        out[p] = d / h;
      }
  return out;
}

// Divergence-free vector field with integer index wavenumbers |k_d| <= band,
// built from random Fourier modes of a vector potential A as curl(A) written
// out analytically. Returned via samples at the grid points.
inline PhysicalField random_solenoidal(const SpectralGrid& grid, int band, unsigned seed) {
  struct Mode {
    double k[3];
    double a[3], b[3];  // A = a cos(k.x) + b sin(k.x)
  };
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Mode> modes;
  for (int k0 = 0; k0 <= band; ++k0)
    for (int k1 = -band; k1 <= band; ++k1)
      for (int k2 = -band; k2 <= band; ++k2) {
        if (k0 == 0 && (k1 < 0 || (k1 == 0 && k2 <= 0))) continue;  // one of each +-k pair
        Mode m;
        const int ks[3] = {k0, k1, k2};
        const double r2 = double(k0 * k0 + k1 * k1 + k2 * k2);
        for (int d = 0; d < 3; ++d) {
          m.k[d] = 2.0 * std::numbers::pi * ks[d] / grid.period(d);
          m.a[d] = normal(rng) / r2;
          m.b[d] = normal(rng) / r2;
        }
        modes.push_back(m);
      }
  return PhysicalField::sample_vector(grid, [&](std::span<const double> x, std::span<double, 3> w) {
    w[0] = w[1] = w[2] = 0.0;
    for (const Mode& m : modes) {
      const double ph = m.k[0] * x[0] + m.k[1] * x[1] + m.k[2] * x[2];
      const double c = std::cos(ph), s = std::sin(ph);
      // grad(a cos + b sin) = k (-a sin + b cos) per component of A
      double g[3];
      for (int d = 0; d < 3; ++d) g[d] = -m.a[d] * s + m.b[d] * c;
      // curl A = k x (A-derivative factor), component-wise
      w[0] += m.k[1] * g[2] - m.k[2] * g[1];
      w[1] += m.k[2] * g[0] - m.k[0] * g[2];
      w[2] += m.k[0] * g[1] - m.k[1] * g[0];
    }
  });
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace oracle
