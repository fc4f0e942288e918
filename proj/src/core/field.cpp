#include "pseudospec/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

template <class T>
std::span<T> slice(std::span<T> all, std::size_t components, std::size_t size, std::size_t c) {
  if (c >= components)
    throw StructuralError("component " + std::to_string(c) + " out of range for a " +
                          std::to_string(components) + "-component field");
  return all.subspan(c * size, size);
}

void check_components(std::size_t components) {
  if (components != 1 && components != 3)
    throw StructuralError("fields have 1 or 3 components, got " + std::to_string(components));
}

}  // namespace

PhysicalField::PhysicalField(const SpectralGrid& grid, std::size_t components)
    : grid_(grid), components_(components), data_(components * grid.point_count(), 0.0) {
  check_components(components);
}

PhysicalField::PhysicalField(const SpectralGrid& grid, std::size_t components,
                             AlignedVector<double> data)
    : grid_(grid), components_(components), data_(std::move(data)) {
  check_components(components);
  if (data_.size() != components * grid.point_count())
    throw StructuralError("physical field has " + std::to_string(data_.size()) + " samples, grid needs " +
                          std::to_string(components * grid.point_count()));
}

PhysicalField PhysicalField::sample(const SpectralGrid& grid,
                                    const std::function<double(std::span<const double>)>& f) {
  PhysicalField out(grid, 1);
  const auto n = grid.padded_samples();
  const std::size_t lead = SpectralGrid::kMaxRank - grid.rank();
  std::array<double, 3> x{};
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n[0]; ++a)
    for (std::size_t b = 0; b < n[1]; ++b)
      for (std::size_t c = 0; c < n[2]; ++c) {
        const std::array<std::size_t, 3> j{a, b, c};
        for (std::size_t d = 0; d < grid.rank(); ++d) x[d] = grid.coordinate(d, j[d + lead]);
        out.data_[idx++] = f(std::span<const double>(x.data(), grid.rank()));
      }
  return out;
}

PhysicalField PhysicalField::sample_vector(
    const SpectralGrid& grid,
    const std::function<void(std::span<const double>, std::span<double, 3>)>& f) {
  PhysicalField out(grid, 3);
  const auto n = grid.padded_samples();
  const std::size_t lead = SpectralGrid::kMaxRank - grid.rank();
  const std::size_t size = grid.point_count();
  std::array<double, 3> x{};
  std::array<double, 3> v{};
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n[0]; ++a)
    for (std::size_t b = 0; b < n[1]; ++b)
      for (std::size_t c = 0; c < n[2]; ++c) {
        const std::array<std::size_t, 3> j{a, b, c};
        for (std::size_t d = 0; d < grid.rank(); ++d) x[d] = grid.coordinate(d, j[d + lead]);
        f(std::span<const double>(x.data(), grid.rank()), std::span<double, 3>(v));
        for (std::size_t k = 0; k < 3; ++k) out.data_[k * size + idx] = v[k];
        ++idx;
      }
  return out;
}

std::span<double> PhysicalField::component(std::size_t c) {
  return slice(std::span<double>(data_), components_, component_size(), c);
}

std::span<const double> PhysicalField::component(std::size_t c) const {
  return slice(std::span<const double>(data_), components_, component_size(), c);
}

double PhysicalField::max_norm() const {
  const std::size_t n = component_size();
  double best = 0.0;
  if (components_ == 1) {
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double a = data_[i], b = data_[n + i], c = data_[2 * n + i];
    best = std::max(best, a * a + b * b + c * c);
  }
  return std::sqrt(best);
}

SpectralField::SpectralField(const SpectralGrid& grid, std::size_t components)
    : grid_(grid), components_(components), data_(components * grid.spectral_count(), Complex{}) {
  check_components(components);
}

SpectralField::SpectralField(const SpectralGrid& grid, std::size_t components,
                             AlignedVector<Complex> data)
    : grid_(grid), components_(components), data_(std::move(data)) {
  check_components(components);
  if (data_.size() != components * grid.spectral_count())
    throw StructuralError("spectral field has " + std::to_string(data_.size()) +
                          " coefficients, grid needs " +
                          std::to_string(components * grid.spectral_count()));
}

std::span<Complex> SpectralField::component(std::size_t c) {
  return slice(std::span<Complex>(data_), components_, component_size(), c);
}

std::span<const Complex> SpectralField::component(std::size_t c) const {
  return slice(std::span<const Complex>(data_), components_, component_size(), c);
}

std::size_t SpectralField::index(std::span<const std::size_t> storage_index) const {
  if (storage_index.size() != grid_.rank())
    throw StructuralError("spectral index needs one entry per grid dimension");
  std::size_t idx = 0;
  for (std::size_t d = 0; d < grid_.rank(); ++d) {
    if (storage_index[d] >= grid_.spectral_extent(d))
      throw StructuralError("spectral storage index out of range");
    idx = idx * grid_.spectral_extent(d) + storage_index[d];
  }
  return idx;
}

std::size_t SpectralField::storage_index(std::size_t d, long k) const {
  const auto n = static_cast<long>(grid_.modes(d));
  const bool last = d + 1 == grid_.rank();
  if (k > n || k <= -n || (last && k < 0))
    throw StructuralError("wavenumber " + std::to_string(k) + " is not stored along axis " +
                          std::to_string(d));
  return static_cast<std::size_t>(k >= 0 ? k : k + 2 * n);
}

}  // namespace pseudospec
