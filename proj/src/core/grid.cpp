#include "pseudospec/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudospec/errors.hpp"

namespace pseudospec {

SpectralGrid::SpectralGrid(std::span<const std::size_t> samples, std::span<const double> periods) {
  if (samples.empty() || samples.size() > kMaxRank)
    throw ConfigError("grid rank must be 1, 2 or 3, got " + std::to_string(samples.size()));
  if (periods.size() != samples.size())
    throw ConfigError("grid needs one period per dimension");
  rank_ = samples.size();
  for (std::size_t d = 0; d < rank_; ++d) {
    if (samples[d] < 8 || samples[d] % 2 != 0)
      throw ConfigError("grid dimension " + std::to_string(d) + " has " + std::to_string(samples[d]) +
                        " samples; need an even count >= 8");
    if (!(periods[d] > 0.0) || !std::isfinite(periods[d]))
      throw ConfigError("grid period must be positive and finite");
    samples_[d] = samples[d];
    periods_[d] = periods[d];
  }
}

SpectralGrid SpectralGrid::line(std::size_t samples, double period) {
  const std::size_t s[] = {samples};
  const double p[] = {period};
  return SpectralGrid(s, p);
}

SpectralGrid SpectralGrid::box(const std::array<std::size_t, 3>& samples, double period) {
  const std::array<double, 3> p = {period, period, period};
  return SpectralGrid(samples, p);
}

double SpectralGrid::min_spacing() const {
  double h = spacing(0);
  for (std::size_t d = 1; d < rank_; ++d) h = std::min(h, spacing(d));
  return h;
}

double SpectralGrid::coordinate(std::size_t d, std::size_t j) const {
  return -0.5 * period(d) + static_cast<double>(j) * spacing(d);
}

long SpectralGrid::wavenumber_index(std::size_t d, std::size_t i) const {
  const auto n = static_cast<long>(modes(d));
  const auto li = static_cast<long>(i);
  return li <= n ? li : li - 2 * n;
}

double SpectralGrid::wavenumber(std::size_t d, std::size_t i) const {
  return 2.0 * std::numbers::pi * static_cast<double>(wavenumber_index(d, i)) / period(d);
}

std::size_t SpectralGrid::point_count() const noexcept {
  std::size_t n = 1;
  for (std::size_t d = 0; d < rank_; ++d) n *= samples_[d];
  return n;
}

std::size_t SpectralGrid::spectral_extent(std::size_t d) const {
  return d + 1 == rank_ ? modes(d) + 1 : samples(d);
}

std::size_t SpectralGrid::spectral_count() const noexcept {
  std::size_t n = 1;
  for (std::size_t d = 0; d < rank_; ++d) n *= spectral_extent(d);
  return n;
}

std::array<std::size_t, 3> SpectralGrid::padded_samples() const noexcept {
  std::array<std::size_t, 3> out{1, 1, 1};
  for (std::size_t d = 0; d < rank_; ++d) out[d + kMaxRank - rank_] = samples_[d];
  return out;
}

std::array<std::size_t, 3> SpectralGrid::padded_spectral_extents() const noexcept {
  std::array<std::size_t, 3> out{1, 1, 1};
  for (std::size_t d = 0; d < rank_; ++d) out[d + kMaxRank - rank_] = spectral_extent(d);
  return out;
}

}  // namespace pseudospec
