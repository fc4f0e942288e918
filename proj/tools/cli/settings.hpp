#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pseudospec/diagnostics.hpp"
#include "pseudospec/euler.hpp"

namespace pseudospec::cli {

struct BurgersSettings {
  std::string ic = "sine";
  /// N values; each run uses 2N samples on [-pi, pi).
  std::vector<std::size_t> resolutions{1024, 2048, 4096};
  std::vector<std::string> filters{"sharp23", "smooth36"};
  /// Output times as fractions of the shock time, used when `output_times` is empty.
  std::vector<double> output_fractions{0.5, 0.75, 0.9, 0.95, 0.975, 0.985};
  std::vector<double> output_times;
  double cfl = 0.1;
  double inverse_sqrt_offset = 0.1;
};

struct EulerSettings {
  /// Samples per axis.
  std::array<std::size_t, 3> dims{64, 64, 128};
  std::vector<std::string> filters{"sharp23", "smooth36"};
  double t_end = 2.0;
  double cfl = 0.78539816339744828;
  double output_interval = 0.5;
  double dt_floor = 1e-8;
  double dt_ceiling = 0.25;
  euler::TubeParams tube;
  bool spectra = true;
  bool checkpoints = true;
  /// Contour planes as "<axis>" (through the centre) or "<axis><index>".
  std::vector<std::string> contour_planes{"y"};
  std::vector<double> contour_fractions{0.2, 0.4, 0.6, 0.8};
  /// Vorticity component shown on contour slices (0, 1, 2).
  std::size_t contour_component = 1;
  std::string restart;
};

struct Settings {
  BurgersSettings burgers;
  EulerSettings euler;
};

/// Reads a JSON document with optional "burgers" and "euler" objects. Unknown
/// keys and ill-typed values raise ConfigError.
Settings load_settings(const std::filesystem::path& path);
Settings settings_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const BurgersSettings& s);
nlohmann::json to_json(const EulerSettings& s);

/// Throws ConfigError for an unusable configuration.
void validate(const BurgersSettings& s);
void validate(const EulerSettings& s);

std::vector<std::size_t> parse_size_list(const std::string& text);

SolverConfig solver_config(const EulerSettings& s, const std::string& filter);
diagnostics::PlaneSpec parse_plane(const std::string& text, const SpectralGrid& grid);

}  // namespace pseudospec::cli
