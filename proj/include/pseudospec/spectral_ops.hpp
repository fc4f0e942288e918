#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pseudospec/field.hpp"
#include "pseudospec/filter.hpp"

namespace pseudospec {

/// Per-axis lookup tables for spectral loops, padded to rank 3 with leading
/// unit axes (wavenumber 0, filter factor 1).
struct ModeTables {
  /// Physical wavenumber used by derivatives; zero at the unpaired Nyquist index.
  std::array<std::vector<double>, 3> wavenumber;
  /// rho(|k_d|/N_d) for each storage index.
  std::array<std::vector<double>, 3> filter;

  static ModeTables build(const SpectralGrid& grid, const FourierFilter& filter);

  double filter_factor(std::size_t i0, std::size_t i1, std::size_t i2) const {
    return filter[0][i0] * filter[1][i1] * filter[2][i2];
  }
  double wavenumber_squared(std::size_t i0, std::size_t i1, std::size_t i2) const {
    return wavenumber[0][i0] * wavenumber[0][i0] + wavenumber[1][i1] * wavenumber[1][i1] +
           wavenumber[2][i2] * wavenumber[2][i2];
  }
};

/// Padded axis (0..2) corresponding to grid axis d.
inline std::size_t padded_axis(const SpectralGrid& grid, std::size_t d) {
  return d + SpectralGrid::kMaxRank - grid.rank();
}

/// Calls fn(linear_index, i0, i1, i2) for every stored spectral coefficient in
/// storage order, using the padded rank-3 indexing.
template <class Fn>
void for_each_mode(const SpectralGrid& grid, Fn&& fn) {
  const auto extent = grid.padded_spectral_extents();
  std::size_t idx = 0;
  for (std::size_t i0 = 0; i0 < extent[0]; ++i0)
    for (std::size_t i1 = 0; i1 < extent[1]; ++i1)
      for (std::size_t i2 = 0; i2 < extent[2]; ++i2) fn(idx++, i0, i1, i2);
}

/// Multiplies every mode by the tensor product of per-axis factors rho(k_d/N_d).
SpectralField apply_filter(const SpectralField& field, const FourierFilter& filter);
void apply_filter_in_place(SpectralField& field, const FourierFilter& filter);

/// Filtered derivative along grid axis `axis`: i*kappa_axis * rho(k) * u_hat_k,
/// with rho the tensor product over all axes. The Nyquist index of the
/// differentiated axis is zeroed. StructuralError for an invalid axis.
SpectralField spectral_derivative(const SpectralField& field, const FourierFilter& filter,
                                  std::size_t axis);
/// Same, transforming a physical input and returning physical samples.
PhysicalField spectral_derivative(const PhysicalField& field, const FourierFilter& filter,
                                  std::size_t axis);

/// Sum over the stored half spectrum of |u_hat|^2, counting the implied
/// conjugate partner of every mode off the self-conjugate planes. Equals the
/// mean of u^2 over the grid.
double spectral_energy(const SpectralGrid& grid, std::span<const Complex> coefficients);

/// Weight (1 or 2) of storage index i2 on the last axis in Hermitian sums.
inline double hermitian_weight(const SpectralGrid& grid, std::size_t i2) {
  const std::size_t last = grid.modes(grid.rank() - 1);
  return (i2 == 0 || i2 == last) ? 1.0 : 2.0;
}

}  // namespace pseudospec
