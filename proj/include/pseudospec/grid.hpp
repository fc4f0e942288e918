#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <span>

namespace pseudospec {

/// Uniform periodic grid in one to three dimensions.
///
/// Dimension d holds 2N_d samples at x_j = -L_d/2 + j*h_d (j = 0, ..., 2N_d - 1)
/// with h_d = L_d / (2N_d). Physical arrays are stored in C order (last axis
/// fastest). Spectral arrays keep only the non-redundant half of the last axis
/// (indices 0..N), everything else in the same C order.
///
/// Storage index i along an axis maps to the integer wavenumber
/// k = i for i <= N and k = i - 2N otherwise, i.e. k in {-N+1, ..., N}.
class SpectralGrid {
 public:
  static constexpr std::size_t kMaxRank = 3;

  /// Throws ConfigError unless every sample count is even and >= 8 and every
  /// period is positive and finite.
  SpectralGrid(std::span<const std::size_t> samples, std::span<const double> periods);

  static SpectralGrid line(std::size_t samples, double period = 2.0 * std::numbers::pi);
  static SpectralGrid box(const std::array<std::size_t, 3>& samples,
                          double period = 4.0 * std::numbers::pi);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t samples(std::size_t d) const { return samples_.at(d); }
  /// N_d, half the number of samples.
  std::size_t modes(std::size_t d) const { return samples_.at(d) / 2; }
  double period(std::size_t d) const { return periods_.at(d); }
  double spacing(std::size_t d) const { return periods_.at(d) / static_cast<double>(samples_.at(d)); }
  double min_spacing() const;

  double coordinate(std::size_t d, std::size_t j) const;

  long wavenumber_index(std::size_t d, std::size_t i) const;
  /// Physical wavenumber 2*pi*k/L_d.
  double wavenumber(std::size_t d, std::size_t i) const;

  std::size_t point_count() const noexcept;
  /// Extent of the spectral array along axis d (N+1 on the last axis).
  std::size_t spectral_extent(std::size_t d) const;
  std::size_t spectral_count() const noexcept;

  /// Shapes padded to rank 3 with leading unit axes, convenient for loops.
  std::array<std::size_t, 3> padded_samples() const noexcept;
  std::array<std::size_t, 3> padded_spectral_extents() const noexcept;

  bool operator==(const SpectralGrid&) const = default;

 private:
  std::size_t rank_ = 0;
  std::array<std::size_t, kMaxRank> samples_{};
  std::array<double, kMaxRank> periods_{};
};

}  // namespace pseudospec
