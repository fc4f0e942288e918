#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>

#include "app.hpp"
#include "manifest.hpp"
#include "pseudospec/burgers.hpp"
#include "pseudospec/diagnostics.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;
namespace dg = pseudospec::diagnostics;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string status_of(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->category()) {
      case ErrorCategory::Instability:
        return "instability";
      case ErrorCategory::Oracle:
        return "oracle-failure";
      case ErrorCategory::Config:
        return "config-error";
      default:
        break;
    }
  }
  return "failed";
}

// Runs `body`, then writes the manifest with the resulting status either way.
template <class Body>
void with_manifest(const fs::path& dir, const std::string& experiment, const json& config, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  json timings = json::object();
  try {
    body(timings);
  } catch (const std::exception& e) {
    timings["total_seconds"] = seconds_since(start);
    write_manifest(dir, experiment, config, timings, status_of(e) + ": " + e.what());
    throw;
  }
  timings["total_seconds"] = seconds_since(start);
  write_manifest(dir, experiment, config, timings, "ok");
}

}  // namespace

fs::path cmd_filter_profile(const fs::path& out_root, std::ostream& log) {
  const json config = {{"samples", 1024}};
  const fs::path dir = make_run_directory(out_root, "filter-profile", config);
  log << "run directory: " << dir.string() << '\n';
  with_manifest(dir, "filter-profile", config, [&](json&) {
    const auto sharp = FourierFilter::sharp_two_thirds();
    const auto smooth = FourierFilter::exponential();
    dg::CsvWriter csv(dir / "filter_profile.csv", {"x", "rho_sharp", "rho_smooth"});
    // The cut-off x = 2/3 is not a multiple of 1/1024, so it gets its own row.
    const double cut = 2.0 / 3.0;
    bool cut_written = false;
    for (int i = 0; i <= 1024; ++i) {
      const double x = i / 1024.0;
      if (!cut_written && x > cut) {
        csv.row({cut, sharp.value(cut), smooth.value(cut)});
        cut_written = true;
      }
      csv.row({x, sharp.value(x), smooth.value(x)});
    }
  });
  return dir;
}

fs::path cmd_burgers(const BurgersSettings& settings, const fs::path& out_root, std::ostream& log) {
  validate(settings);
  const auto ic = settings.ic == "sine" ? burgers::InitialCondition::sine()
                                        : burgers::InitialCondition::inverse_sqrt_sin_sq(settings.inverse_sqrt_offset);
  const double shock = burgers::shock_time(ic);
  std::vector<double> times = settings.output_times;
  if (times.empty())
    for (double f : settings.output_fractions) times.push_back(f * shock);
  std::sort(times.begin(), times.end());
  for (double t : times)
    if (!(t > 0.0 && t < shock)) throw ConfigError("output time " + dg::format_number(t) + " is not in (0, shock time)");

  json config = to_json(settings);
  config["resolved_output_times"] = times;
  config["shock_time"] = shock;
  const fs::path dir = make_run_directory(out_root, "burgers", config);
  log << "run directory: " << dir.string() << '\n';
  log << "initial condition " << ic.name() << ", shock time " << dg::format_number(shock) << '\n';

  with_manifest(dir, "burgers", config, [&](json& timings) {
    dg::CsvWriter errors(dir / "errors.csv", dg::errors_header());
    dg::CsvWriter summary(dir / "summary.csv", {"filter", "N", "t", "l_inf", "l_1", "accurate_band"});
    for (const auto& name : settings.filters) {
      const FourierFilter filter = FourierFilter::parse(name);
      for (std::size_t n : settings.resolutions) {
        const auto start = std::chrono::steady_clock::now();
        const std::string cell = filter.name() + "_N" + std::to_string(n);
        const fs::path cell_dir = dir / cell;
        fs::create_directories(cell_dir);
        const auto snaps = burgers::run_burgers(ic, SpectralGrid::line(2 * n), filter, times, settings.cfl);
        for (const auto& snap : snaps) {
          const std::string tag = dg::time_tag(snap.state.t);
          dg::append_errors(errors, {n, filter.name()}, snap);
          dg::write_pointwise(cell_dir / ("pointwise_t" + tag + ".csv"), snap);
          dg::write_spectrum(cell_dir / ("spectrum_t" + tag + ".csv"), snap);
          const long band = burgers::accurate_band(snap.spectrum);
          const std::string row[] = {filter.name(), std::to_string(n), dg::format_number(snap.state.t),
                                     dg::format_number(snap.error.l_inf), dg::format_number(snap.error.l_1),
                                     std::to_string(band)};
          summary.row(row);
          log << std::left << std::setw(9) << filter.name() << " N=" << std::setw(6) << n << " t="
              << std::setw(8) << dg::time_tag(snap.state.t) << " l_inf=" << std::scientific << std::setprecision(3)
              << snap.error.l_inf << " l_1=" << snap.error.l_1 << std::defaultfloat << " band=" << band << '\n';
        }
        timings[cell] = seconds_since(start);
      }
    }
  });
  return dir;
}

fs::path cmd_euler(const EulerSettings& settings, const fs::path& out_root, std::ostream& log) {
  validate(settings);
  const SpectralGrid grid = SpectralGrid::box(settings.dims);
  std::vector<dg::PlaneSpec> planes;
  for (const auto& p : settings.contour_planes) planes.push_back(parse_plane(p, grid));
  if (settings.restart.empty()) settings.tube.validate(grid);

  json config = to_json(settings);
  const fs::path dir = make_run_directory(out_root, "euler", config);
  log << "run directory: " << dir.string() << '\n';

  with_manifest(dir, "euler", config, [&](json& timings) {
    dg::CsvWriter summary(dir / "summary.csv",
                          {"filter", "t_final", "steps", "reprojections", "max_vorticity", "energy_initial",
                           "energy_final", "energy_drift", "symmetry_residual", "divergence_residual"});
    for (const auto& name : settings.filters) {
      const auto start = std::chrono::steady_clock::now();
      const SolverConfig solver = solver_config(settings, name);
      euler::VorticityState state0 =
          settings.restart.empty() ? euler::make_tube_initial_data(settings.tube, grid, solver)
                                   : dg::read_checkpoint(settings.restart, solver, &grid);
      if (settings.t_end < state0.t)
        throw ConfigError("t_end " + dg::format_number(settings.t_end) + " precedes the restart time " +
                          dg::format_number(state0.t));

      dg::RecorderOptions options;
      options.directory = dir / solver.filter.name();
      options.spectra = settings.spectra;
      options.checkpoints = settings.checkpoints;
      options.planes = planes;
      options.level_fractions = settings.contour_fractions;
      options.contour_component = settings.contour_component;
      dg::EulerRecorder recorder(options);

      log << solver.filter.name() << ": t " << dg::time_tag(state0.t) << " -> " << dg::time_tag(settings.t_end)
          << " on " << settings.dims[0] << "x" << settings.dims[1] << "x" << settings.dims[2] << '\n';
      const euler::VorticityState final_state = euler::run_euler(state0, settings.t_end, &recorder);

      const auto& records = recorder.records();
      const double e0 = records.front().energy;
      const double e1 = records.back().energy;
      const double drift = e0 > 0.0 ? std::abs(e1 - e0) / e0 : 0.0;
      const double symmetry = euler::symmetry_residuals(final_state.omega).max();
      const double divergence = euler::divergence_residual(final_state.omega);
      const std::string row[] = {solver.filter.name(),
                                 dg::format_number(final_state.t),
                                 std::to_string(final_state.step_count),
                                 std::to_string(recorder.reprojections()),
                                 dg::format_number(records.back().max_vorticity),
                                 dg::format_number(e0),
                                 dg::format_number(e1),
                                 dg::format_number(drift),
                                 dg::format_number(symmetry),
                                 dg::format_number(divergence)};
      summary.row(row);
      log << "  steps " << final_state.step_count << ", max vorticity " << records.back().max_vorticity
          << ", energy drift " << drift << ", reprojections " << recorder.reprojections() << '\n';
      timings[solver.filter.name()] = seconds_since(start);
    }
  });
  return dir;
}

}  // namespace pseudospec::cli
