#include "pseudospec/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "pseudospec/errors.hpp"
#include "pseudospec/spectral_ops.hpp"

namespace pseudospec {
namespace {

// FFTW plans for one grid shape. Planned with FFTW_ESTIMATE so that the
// chosen algorithm, and hence the rounding, never depends on timing.
struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;

  PlanPair() = default;
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;
  ~PlanPair() {
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
  }
};

using ShapeKey = std::array<std::size_t, 4>;  // rank, samples...

class PlanCache {
 public:
  const PlanPair& get(const SpectralGrid& grid) {
    ShapeKey key{grid.rank(), 0, 0, 0};
    for (std::size_t d = 0; d < grid.rank(); ++d) key[d + 1] = grid.samples(d);

    std::lock_guard lock(mutex_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return *it->second;

    std::array<int, 3> n{};
    for (std::size_t d = 0; d < grid.rank(); ++d) n[d] = static_cast<int>(grid.samples(d));
    AlignedVector<double> real(grid.point_count());
    AlignedVector<Complex> spec(grid.spectral_count());
    auto* cplx = reinterpret_cast<fftw_complex*>(spec.data());
    const int rank = static_cast<int>(grid.rank());

    auto plans = std::make_unique<PlanPair>();
    plans->r2c = fftw_plan_dft_r2c(rank, n.data(), real.data(), cplx, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    plans->c2r = fftw_plan_dft_c2r(rank, n.data(), cplx, real.data(), FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
    if (!plans->r2c || !plans->c2r) throw StructuralError("FFTW could not plan the transform");
    return *plans_.emplace(key, std::move(plans)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<ShapeKey, std::unique_ptr<PlanPair>> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

// The grid starts at -L/2 instead of 0, which multiplies mode k by (-1)^k.
// Applied in both directions so the raw FFT matches the centered convention.
template <class Fn>
void for_each_phase(const SpectralGrid& grid, Fn&& fn) {
  for_each_mode(grid, [&](std::size_t idx, std::size_t i0, std::size_t i1, std::size_t i2) {
    fn(idx, ((i0 + i1 + i2) & 1U) ? -1.0 : 1.0);
  });
}

AlignedVector<Complex>& scratch(std::size_t n) {
  thread_local AlignedVector<Complex> buffer;
  if (buffer.size() < n) buffer.resize(n);
  return buffer;
}

}  // namespace

namespace detail {

void forward_into(const SpectralGrid& grid, std::span<const double> in, std::span<Complex> out) {
  const PlanPair& plans = plan_cache().get(grid);
  // r2c does not modify its input.
  fftw_execute_dft_r2c(plans.r2c, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(grid.point_count());
  for_each_phase(grid, [&](std::size_t idx, double sign) { out[idx] *= sign * scale; });
}

void inverse_into(const SpectralGrid& grid, std::span<const Complex> in, std::span<double> out) {
  const PlanPair& plans = plan_cache().get(grid);
  auto& buf = scratch(in.size());
  for_each_phase(grid, [&](std::size_t idx, double sign) { buf[idx] = sign * in[idx]; });
  fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(buf.data()), out.data());
}

double hermitian_defect(const SpectralGrid& grid, std::span<const Complex> c) {
  double scale = 0.0;
  for (const Complex& v : c) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;

  const auto extent = grid.padded_spectral_extents();
  const std::size_t last_modes = grid.modes(grid.rank() - 1);
  double defect = 0.0;
  for (std::size_t i2 : {std::size_t{0}, last_modes}) {
    for (std::size_t i0 = 0; i0 < extent[0]; ++i0) {
      const std::size_t p0 = (extent[0] - i0) % extent[0];
      for (std::size_t i1 = 0; i1 < extent[1]; ++i1) {
        const std::size_t p1 = (extent[1] - i1) % extent[1];
        const Complex a = c[(i0 * extent[1] + i1) * extent[2] + i2];
        const Complex b = c[(p0 * extent[1] + p1) * extent[2] + i2];
        defect = std::max(defect, std::abs(a - std::conj(b)));
      }
    }
  }
  return defect / scale;
}

}  // namespace detail

SpectralField forward_transform(const PhysicalField& field) {
  SpectralField out(field.grid(), field.components());
  for (std::size_t c = 0; c < field.components(); ++c)
    detail::forward_into(field.grid(), field.component(c), out.component(c));
  return out;
}

PhysicalField inverse_transform(const SpectralField& field) {
  constexpr double kTolerance = 1e-12;
  PhysicalField out(field.grid(), field.components());
  for (std::size_t c = 0; c < field.components(); ++c) {
    const double defect = detail::hermitian_defect(field.grid(), field.component(c));
    if (defect > kTolerance)
      throw DataIntegrityError("spectrum of component " + std::to_string(c) +
                               " is not conjugate-symmetric (relative defect " +
                               std::to_string(defect) + ")");
    detail::inverse_into(field.grid(), field.component(c), out.component(c));
  }
  return out;
}

}  // namespace pseudospec
