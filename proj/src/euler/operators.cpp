#include <algorithm>
#include <cmath>

#include "pseudospec/errors.hpp"
#include "pseudospec/euler.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec::euler {
namespace {

void require_vector_3d(const SpectralGrid& grid, std::size_t components) {
  if (grid.rank() != 3) throw StructuralError("Euler operators need a 3D grid");
  if (components != 3) throw StructuralError("Euler operators need a 3-component field");
}

ModeTables derivative_tables(const SpectralGrid& grid) {
  return ModeTables::build(grid, FourierFilter::identity());
}

}  // namespace

void project_divergence_free(SpectralField& v_hat) {
  const SpectralGrid& grid = v_hat.grid();
  require_vector_3d(grid, v_hat.components());
  const ModeTables t = derivative_tables(grid);
  auto vx = v_hat.component(0);
  auto vy = v_hat.component(1);
  auto vz = v_hat.component(2);
  for_each_mode(grid, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
    const double k2 = t.wavenumber_squared(i0, i1, i2);
    if (k2 == 0.0) return;
    const double kx = t.wavenumber[0][i0], ky = t.wavenumber[1][i1], kz = t.wavenumber[2][i2];
    const Complex p = (kx * vx[idx] + ky * vy[idx] + kz * vz[idx]) / k2;
    vx[idx] -= kx * p;
    vy[idx] -= ky * p;
    vz[idx] -= kz * p;
  });
}

PhysicalField project_divergence_free(const PhysicalField& v) {
  SpectralField v_hat = forward_transform(v);
  project_divergence_free(v_hat);
  return inverse_transform(v_hat);
}

double divergence_residual(const SpectralField& v_hat) {
  const SpectralGrid& grid = v_hat.grid();
  require_vector_3d(grid, v_hat.components());
  const ModeTables t = derivative_tables(grid);
  const auto vx = v_hat.component(0);
  const auto vy = v_hat.component(1);
  const auto vz = v_hat.component(2);
  double num = 0.0;
  double den = 0.0;
  for_each_mode(grid, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
    const double w = hermitian_weight(grid, i2);
    const double kx = t.wavenumber[0][i0], ky = t.wavenumber[1][i1], kz = t.wavenumber[2][i2];
    num += w * std::norm(kx * vx[idx] + ky * vy[idx] + kz * vz[idx]);
    den += w * t.wavenumber_squared(i0, i1, i2) *
           (std::norm(vx[idx]) + std::norm(vy[idx]) + std::norm(vz[idx]));
  });
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

double divergence_residual(const PhysicalField& v) { return divergence_residual(forward_transform(v)); }

SpectralField vorticity_to_velocity(const SpectralField& omega_hat, const FourierFilter& filter) {
  require_vector_3d(omega_hat.grid(), omega_hat.components());
  return EulerOperator(omega_hat.grid(), filter).velocity(omega_hat);
}

PhysicalField vorticity_to_velocity(const PhysicalField& omega, const FourierFilter& filter) {
  return inverse_transform(vorticity_to_velocity(forward_transform(omega), filter));
}

SpectralField curl(const SpectralField& v_hat, const FourierFilter& filter) {
  const SpectralGrid& grid = v_hat.grid();
  require_vector_3d(grid, v_hat.components());
  const ModeTables t = ModeTables::build(grid, filter);
  const auto vx = v_hat.component(0);
  const auto vy = v_hat.component(1);
  const auto vz = v_hat.component(2);
  SpectralField out(grid, 3);
  auto cx = out.component(0);
  auto cy = out.component(1);
  auto cz = out.component(2);
  const Complex i(0.0, 1.0);
  for_each_mode(grid, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
    const Complex s = i * t.filter_factor(i0, i1, i2);
    const double kx = t.wavenumber[0][i0], ky = t.wavenumber[1][i1], kz = t.wavenumber[2][i2];
    cx[idx] = s * (ky * vz[idx] - kz * vy[idx]);
    cy[idx] = s * (kz * vx[idx] - kx * vz[idx]);
    cz[idx] = s * (kx * vy[idx] - ky * vx[idx]);
  });
  return out;
}

PhysicalField curl(const PhysicalField& v, const FourierFilter& filter) {
  return inverse_transform(curl(forward_transform(v), filter));
}

PhysicalField euler_rhs(const PhysicalField& omega, const FourierFilter& filter) {
  require_vector_3d(omega.grid(), omega.components());
  const EulerOperator op(omega.grid(), filter);
  const PhysicalField out = inverse_transform(op.rhs(forward_transform(omega)));
  for (double v : out.values())
    if (!std::isfinite(v)) throw InstabilityError("non-finite Euler right-hand side", 0.0, 0);
  return out;
}

EulerOperator::EulerOperator(const SpectralGrid& grid, const FourierFilter& filter)
    : grid_(grid), filter_(filter), tables_(ModeTables::build(grid, filter)) {
  if (grid.rank() != 3) throw StructuralError("Euler operators need a 3D grid");
}

SpectralField EulerOperator::velocity(const SpectralField& omega_hat) const {
  require_vector_3d(omega_hat.grid(), omega_hat.components());
  const auto wx = omega_hat.component(0);
  const auto wy = omega_hat.component(1);
  const auto wz = omega_hat.component(2);
  SpectralField out(grid_, 3);
  auto ux = out.component(0);
  auto uy = out.component(1);
  auto uz = out.component(2);
  for_each_mode(grid_, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
    const double k2 = tables_.wavenumber_squared(i0, i1, i2);
    if (k2 == 0.0) {
      ux[idx] = uy[idx] = uz[idx] = 0.0;
      return;
    }
    const Complex s(0.0, tables_.filter_factor(i0, i1, i2) / k2);
    const double kx = tables_.wavenumber[0][i0], ky = tables_.wavenumber[1][i1],
                 kz = tables_.wavenumber[2][i2];
    ux[idx] = s * (ky * wz[idx] - kz * wy[idx]);
    uy[idx] = s * (kz * wx[idx] - kx * wz[idx]);
    uz[idx] = s * (kx * wy[idx] - ky * wx[idx]);
  });
  return out;
}

double EulerOperator::max_velocity(const SpectralField& omega_hat) const {
  const SpectralField u_hat = velocity(omega_hat);
  PhysicalField u(grid_, 3);
  for (std::size_t c = 0; c < 3; ++c) detail::inverse_into(grid_, u_hat.component(c), u.component(c));
  return u.max_norm();
}

SpectralField EulerOperator::rhs(const SpectralField& omega_hat) const {
  require_vector_3d(omega_hat.grid(), omega_hat.components());
  const std::size_t n = grid_.point_count();

  // Unfiltered velocity coefficients; the filter enters through the tables below.
  SpectralField u_hat(grid_, 3);
  {
    const auto wx = omega_hat.component(0);
    const auto wy = omega_hat.component(1);
    const auto wz = omega_hat.component(2);
    auto ux = u_hat.component(0);
    auto uy = u_hat.component(1);
    auto uz = u_hat.component(2);
    for_each_mode(grid_, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
      const double k2 = tables_.wavenumber_squared(i0, i1, i2);
      if (k2 == 0.0) {
        ux[idx] = uy[idx] = uz[idx] = 0.0;
        return;
      }
      const Complex s(0.0, 1.0 / k2);
      const double kx = tables_.wavenumber[0][i0], ky = tables_.wavenumber[1][i1],
                   kz = tables_.wavenumber[2][i2];
      ux[idx] = s * (ky * wz[idx] - kz * wy[idx]);
      uy[idx] = s * (kz * wx[idx] - kx * wz[idx]);
      uz[idx] = s * (kx * wy[idx] - ky * wx[idx]);
    });
  }

  SpectralField scratch(grid_, 1);
  auto tmp = scratch.component(0);
  // tmp = i^p * kappa_axis^p * rho * in, with p = 0 (axis < 0) or 1.
  auto prepare = [&](std::span<const Complex> in, int axis) {
    for_each_mode(grid_, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
      const double rho = tables_.filter_factor(i0, i1, i2);
      if (axis < 0) {
        tmp[idx] = rho * in[idx];
      } else {
        const std::size_t i[3] = {i0, i1, i2};
        tmp[idx] = Complex(0.0, rho * tables_.wavenumber[axis][i[axis]]) * in[idx];
      }
    });
  };

  PhysicalField w(grid_, 3);
  PhysicalField u(grid_, 3);
  for (std::size_t c = 0; c < 3; ++c) {
    prepare(omega_hat.component(c), -1);
    detail::inverse_into(grid_, tmp, w.component(c));
    prepare(u_hat.component(c), -1);
    detail::inverse_into(grid_, tmp, u.component(c));
  }

  SpectralField out(grid_, 3);
  AlignedVector<double> acc(n);
  AlignedVector<double> grad(n);
  for (std::size_t i = 0; i < 3; ++i) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int j = 0; j < 3; ++j) {
      const auto wj = w.component(j);
      const auto uj = u.component(j);
      prepare(u_hat.component(i), j);
      detail::inverse_into(grid_, tmp, grad);
      for (std::size_t p = 0; p < n; ++p) acc[p] += wj[p] * grad[p];
      prepare(omega_hat.component(i), j);
      detail::inverse_into(grid_, tmp, grad);
      for (std::size_t p = 0; p < n; ++p) acc[p] -= uj[p] * grad[p];
    }
    auto dst = out.component(i);
    detail::forward_into(grid_, acc, dst);
    for_each_mode(grid_, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
      dst[idx] *= tables_.filter_factor(i0, i1, i2);
    });
  }
  return out;
}

void EulerOperator::filter_in_place(SpectralField& omega_hat) const {
  if (filter_.kind() == FilterKind::Identity) return;
  for (std::size_t c = 0; c < omega_hat.components(); ++c) {
    auto data = omega_hat.component(c);
    for_each_mode(grid_, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
      data[idx] *= tables_.filter_factor(i0, i1, i2);
    });
  }
}

}  // namespace pseudospec::euler
