#include "pseudospec/spectral_ops.hpp"

#include <string>

#include "pseudospec/errors.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec {

ModeTables ModeTables::build(const SpectralGrid& grid, const FourierFilter& filter) {
  ModeTables t;
  for (std::size_t a = 0; a < 3; ++a) {
    t.wavenumber[a] = {0.0};
    t.filter[a] = {1.0};
  }
  for (std::size_t d = 0; d < grid.rank(); ++d) {
    const std::size_t a = padded_axis(grid, d);
    const std::size_t extent = grid.spectral_extent(d);
    const auto n = static_cast<long>(grid.modes(d));
    t.wavenumber[a].assign(extent, 0.0);
    t.filter[a].assign(extent, 1.0);
    for (std::size_t i = 0; i < extent; ++i) {
      const long k = grid.wavenumber_index(d, i);
      t.wavenumber[a][i] = k == n ? 0.0 : grid.wavenumber(d, i);
      t.filter[a][i] = filter.mode_factor(k, n);
    }
  }
  return t;
}

void apply_filter_in_place(SpectralField& field, const FourierFilter& filter) {
  if (filter.kind() == FilterKind::Identity) return;
  const ModeTables tables = ModeTables::build(field.grid(), filter);
  for (std::size_t c = 0; c < field.components(); ++c) {
    auto data = field.component(c);
    for_each_mode(field.grid(), [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
      data[idx] *= tables.filter_factor(i0, i1, i2);
    });
  }
}

SpectralField apply_filter(const SpectralField& field, const FourierFilter& filter) {
  SpectralField out = field;
  apply_filter_in_place(out, filter);
  return out;
}

SpectralField spectral_derivative(const SpectralField& field, const FourierFilter& filter,
                                  std::size_t axis) {
  const SpectralGrid& grid = field.grid();
  if (axis >= grid.rank())
    throw StructuralError("derivative axis " + std::to_string(axis) + " invalid for a rank-" +
                          std::to_string(grid.rank()) + " grid");
  const ModeTables tables = ModeTables::build(grid, filter);
  const std::size_t a = padded_axis(grid, axis);
  SpectralField out(grid, field.components());
  for (std::size_t c = 0; c < field.components(); ++c) {
    const auto in = field.component(c);
    auto dst = out.component(c);
    for_each_mode(grid, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
      const std::size_t i[3] = {i0, i1, i2};
      const double factor = tables.wavenumber[a][i[a]] * tables.filter_factor(i0, i1, i2);
      dst[idx] = Complex(0.0, factor) * in[idx];
    });
  }
  return out;
}

PhysicalField spectral_derivative(const PhysicalField& field, const FourierFilter& filter,
                                  std::size_t axis) {
  return inverse_transform(spectral_derivative(forward_transform(field), filter, axis));
}

double spectral_energy(const SpectralGrid& grid, std::span<const Complex> coefficients) {
  double sum = 0.0;
  for_each_mode(grid, [&](std::size_t idx, std::size_t, std::size_t, std::size_t i2) {
    sum += hermitian_weight(grid, i2) * std::norm(coefficients[idx]);
  });
  return sum;
}

}  // namespace pseudospec
