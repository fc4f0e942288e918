#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

#include "pseudospec/aligned.hpp"
#include "pseudospec/grid.hpp"

namespace pseudospec {

using Complex = std::complex<double>;

enum class Space { Physical, Spectral };

/// Real samples on a grid; scalar (1 component) or vector (3 components).
/// Components are stored one after another, each in the grid's C order.
class PhysicalField {
 public:
  static constexpr Space space = Space::Physical;

  explicit PhysicalField(const SpectralGrid& grid, std::size_t components = 1);
  /// Throws StructuralError when data.size() != components * grid.point_count().
  PhysicalField(const SpectralGrid& grid, std::size_t components, AlignedVector<double> data);

  /// Samples f(x) at every grid point; x has one entry per grid dimension.
  static PhysicalField sample(const SpectralGrid& grid,
                              const std::function<double(std::span<const double>)>& f);
  /// Vector version: f writes the three components for point x.
  static PhysicalField sample_vector(
      const SpectralGrid& grid,
      const std::function<void(std::span<const double>, std::span<double, 3>)>& f);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::size_t components() const noexcept { return components_; }
  std::size_t component_size() const noexcept { return grid_.point_count(); }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }
  std::span<double> component(std::size_t c);
  std::span<const double> component(std::size_t c) const;

  /// Largest absolute sample (scalar) or largest pointwise Euclidean norm (vector).
  double max_norm() const;

 private:
  SpectralGrid grid_;
  std::size_t components_;
  AlignedVector<double> data_;
};

/// Fourier coefficients u_hat_k of a real field, normalized so that
/// u(x_j) = sum_k u_hat_k exp(i k.x_j). Only the half spectrum along the last
/// axis is stored (see SpectralGrid); the other half is implied by Hermitian
/// symmetry.
class SpectralField {
 public:
  static constexpr Space space = Space::Spectral;

  explicit SpectralField(const SpectralGrid& grid, std::size_t components = 1);
  /// Throws StructuralError when data.size() != components * grid.spectral_count().
  SpectralField(const SpectralGrid& grid, std::size_t components, AlignedVector<Complex> data);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::size_t components() const noexcept { return components_; }
  std::size_t component_size() const noexcept { return grid_.spectral_count(); }

  std::span<Complex> values() noexcept { return data_; }
  std::span<const Complex> values() const noexcept { return data_; }
  std::span<Complex> component(std::size_t c);
  std::span<const Complex> component(std::size_t c) const;

  /// Linear index of the stored coefficient for storage indices (i0, i1, i2);
  /// unused leading indices are ignored for lower-rank grids.
  std::size_t index(std::span<const std::size_t> storage_index) const;
  /// Storage index of integer wavenumber k along axis d; for the last axis only
  /// k >= 0 is stored. Throws StructuralError when k is outside the stored range.
  std::size_t storage_index(std::size_t d, long k) const;

 private:
  SpectralGrid grid_;
  std::size_t components_;
  AlignedVector<Complex> data_;
};

}  // namespace pseudospec
