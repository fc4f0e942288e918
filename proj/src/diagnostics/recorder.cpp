#include <algorithm>
#include <cmath>

#include "pseudospec/diagnostics.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec::diagnostics {

EulerRecorder::EulerRecorder(RecorderOptions options) : options_(std::move(options)) {
  std::filesystem::create_directories(options_.directory);
}

void EulerRecorder::note(const std::filesystem::path& p) {
  if (std::find(files_.begin(), files_.end(), p) == files_.end()) files_.push_back(p);
}

void EulerRecorder::on_output(const euler::VorticityState& state, double dt) {
  const auto& dir = options_.directory;
  records_.push_back(compute_record(state, dt));
  write_diagnostics(dir / "diagnostics.csv", records_);
  note(dir / "diagnostics.csv");

  const std::string tag = time_tag(state.t);
  if (options_.spectra) {
    const SpectralField omega_hat = forward_transform(state.omega);
    const SpectralField u_hat = euler::vorticity_to_velocity(omega_hat, state.config.filter);
    const auto e_path = dir / ("energy_spectrum_t" + tag + ".csv");
    const auto z_path = dir / ("enstrophy_spectrum_t" + tag + ".csv");
    write_shell_spectrum(e_path, "E", energy_spectrum(u_hat));
    write_shell_spectrum(z_path, "Z", enstrophy_spectrum(omega_hat));
    note(e_path);
    note(z_path);
  }

  for (const PlaneSpec& plane : options_.planes) {
    const auto& grid = state.omega.grid();
    if (plane.normal > 2 || plane.index >= grid.samples(plane.normal))
      throw ConfigError("contour plane lies outside the grid");
    // Levels follow the slice's own range so that contours stay meaningful as the peak grows.
    double peak = 0.0;
    {
      const auto data = state.omega.component(options_.contour_component);
      const std::size_t n1 = grid.samples(1), n2 = grid.samples(2);
      for (std::size_t i = 0; i < grid.samples(0); ++i)
        for (std::size_t j = 0; j < n1; ++j)
          for (std::size_t l = 0; l < n2; ++l) {
            const std::size_t idx[3] = {i, j, l};
            if (idx[plane.normal] != plane.index) continue;
            peak = std::max(peak, std::abs(data[(i * n1 + j) * n2 + l]));
          }
    }
    std::vector<double> levels;
    for (double f : options_.level_fractions) levels.push_back(f * peak);
    const auto path = dir / ("contour_t" + tag + "_" + plane.name() + ".csv");
    write_contours(path, peak > 0.0 ? contour_slice(state.omega, options_.contour_component, plane, levels)
                                    : std::vector<Polyline>{});
    note(path);
  }

  if (options_.checkpoints) {
    const auto path = dir / ("checkpoint_t" + tag + ".bin");
    write_checkpoint(path, state);
    note(path);
  }
}

void EulerRecorder::on_reprojection(double t, std::uint64_t step, double residual) {
  ++reprojections_;
  const auto path = options_.directory / "reprojections.csv";
  if (!events_) {
    events_ = std::make_unique<CsvWriter>(path, std::vector<std::string>{"t", "step", "residual"});
    note(path);
  }
  events_->row({t, static_cast<double>(step), residual});
}

void EulerRecorder::on_failure(const euler::VorticityState& last_good, const InstabilityError&) {
  const auto path = options_.directory / "checkpoint_failure.bin";
  write_checkpoint(path, last_good);
  note(path);
}

}  // namespace pseudospec::diagnostics
