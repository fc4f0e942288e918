#include "settings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "pseudospec/errors.hpp"

namespace pseudospec::cli {
namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw ConfigError("unknown key '" + where + "." + item.key() + "'");
  }
}

template <class T>
void read(const json& obj, const std::string& where, const char* key, T& target) {
  if (!obj.contains(key)) return;
  try {
    target = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("wrong type for '" + where + "." + key + "'");
  }
}

}  // namespace

Settings settings_from_json(const json& doc) {
  Settings s;
  check_keys(doc, "config", {"burgers", "euler"});
  if (doc.contains("burgers")) {
    const json& b = doc["burgers"];
    const std::string w = "burgers";
    check_keys(b, w, {"ic", "resolutions", "filters", "output_fractions", "output_times", "cfl",
                      "inverse_sqrt_offset"});
    read(b, w, "ic", s.burgers.ic);
    read(b, w, "resolutions", s.burgers.resolutions);
    read(b, w, "filters", s.burgers.filters);
    read(b, w, "output_fractions", s.burgers.output_fractions);
    read(b, w, "output_times", s.burgers.output_times);
    read(b, w, "cfl", s.burgers.cfl);
    read(b, w, "inverse_sqrt_offset", s.burgers.inverse_sqrt_offset);
  }
  if (doc.contains("euler")) {
    const json& e = doc["euler"];
    const std::string w = "euler";
    check_keys(e, w, {"dims", "filters", "t_end", "cfl", "output_interval", "dt_floor", "dt_ceiling", "tube",
                      "spectra", "checkpoints", "contour_planes", "contour_fractions", "contour_component",
                      "restart"});
    read(e, w, "dims", s.euler.dims);
    read(e, w, "filters", s.euler.filters);
    read(e, w, "t_end", s.euler.t_end);
    read(e, w, "cfl", s.euler.cfl);
    read(e, w, "output_interval", s.euler.output_interval);
    read(e, w, "dt_floor", s.euler.dt_floor);
    read(e, w, "dt_ceiling", s.euler.dt_ceiling);
    read(e, w, "spectra", s.euler.spectra);
    read(e, w, "checkpoints", s.euler.checkpoints);
    read(e, w, "contour_planes", s.euler.contour_planes);
    read(e, w, "contour_fractions", s.euler.contour_fractions);
    read(e, w, "contour_component", s.euler.contour_component);
    read(e, w, "restart", s.euler.restart);
    if (e.contains("tube")) {
      const json& t = e["tube"];
      const std::string tw = "euler.tube";
      check_keys(t, tw, {"core_radius", "separation", "peak_vorticity", "perturbation_amplitude",
                         "perturbation_wavelength", "profile_exponent"});
      read(t, tw, "core_radius", s.euler.tube.core_radius);
      read(t, tw, "separation", s.euler.tube.separation);
      read(t, tw, "peak_vorticity", s.euler.tube.peak_vorticity);
      read(t, tw, "perturbation_amplitude", s.euler.tube.perturbation_amplitude);
      read(t, tw, "perturbation_wavelength", s.euler.tube.perturbation_wavelength);
      read(t, tw, "profile_exponent", s.euler.tube.profile_exponent);
    }
  }
  return s;
}

Settings load_settings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return settings_from_json(doc);
}

json to_json(const BurgersSettings& s) {
  return {{"ic", s.ic},
          {"resolutions", s.resolutions},
          {"filters", s.filters},
          {"output_fractions", s.output_fractions},
          {"output_times", s.output_times},
          {"cfl", s.cfl},
          {"inverse_sqrt_offset", s.inverse_sqrt_offset}};
}

json to_json(const EulerSettings& s) {
  return {{"dims", s.dims},
          {"filters", s.filters},
          {"t_end", s.t_end},
          {"cfl", s.cfl},
          {"output_interval", s.output_interval},
          {"dt_floor", s.dt_floor},
          {"dt_ceiling", s.dt_ceiling},
          {"tube",
           {{"core_radius", s.tube.core_radius},
            {"separation", s.tube.separation},
            {"peak_vorticity", s.tube.peak_vorticity},
            {"perturbation_amplitude", s.tube.perturbation_amplitude},
            {"perturbation_wavelength", s.tube.perturbation_wavelength},
            {"profile_exponent", s.tube.profile_exponent}}},
          {"spectra", s.spectra},
          {"checkpoints", s.checkpoints},
          {"contour_planes", s.contour_planes},
          {"contour_fractions", s.contour_fractions},
          {"contour_component", s.contour_component},
          {"restart", s.restart}};
}

void validate(const BurgersSettings& s) {
  if (s.ic != "sine" && s.ic != "inverse-sqrt") throw ConfigError("unknown initial condition '" + s.ic + "'");
  if (s.resolutions.empty()) throw ConfigError("the resolution list is empty");
  for (std::size_t n : s.resolutions)
    if (n < 4) throw ConfigError("Burgers resolution N must be at least 4");
  if (s.filters.empty()) throw ConfigError("the filter list is empty");
  for (const auto& f : s.filters) FourierFilter::parse(f);
  if (s.output_times.empty() && s.output_fractions.empty()) throw ConfigError("no output times configured");
  for (double f : s.output_fractions)
    if (!(f > 0.0 && f < 1.0)) throw ConfigError("output fractions must lie in (0, 1)");
  if (!(s.cfl > 0.0) || !std::isfinite(s.cfl)) throw ConfigError("Burgers CFL number must be positive");
}

void validate(const EulerSettings& s) {
  for (std::size_t n : s.dims)
    if (n < 8 || n % 2 != 0) throw ConfigError("grid dims must be even and at least 8");
  if (s.filters.empty()) throw ConfigError("the filter list is empty");
  for (const auto& f : s.filters) FourierFilter::parse(f);
  if (!(s.t_end >= 0.0) || !std::isfinite(s.t_end)) throw ConfigError("t_end must be non-negative");
  if (s.contour_component > 2) throw ConfigError("contour component must be 0, 1 or 2");
  for (double f : s.contour_fractions)
    if (!(f > 0.0 && f <= 1.0)) throw ConfigError("contour fractions must lie in (0, 1]");
  solver_config(s, s.filters.front()).validate();
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw ConfigError("not an integer: '" + item + "'");
    }
    if (pos != item.size() || v < 0) throw ConfigError("not a non-negative integer: '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

SolverConfig solver_config(const EulerSettings& s, const std::string& filter) {
  SolverConfig c;
  c.filter = FourierFilter::parse(filter);
  c.cfl = s.cfl;
  c.integrator = Integrator::Rk4;
  c.output_interval = s.output_interval;
  c.dt_floor = s.dt_floor;
  c.dt_ceiling = s.dt_ceiling;
  return c;
}

diagnostics::PlaneSpec parse_plane(const std::string& text, const SpectralGrid& grid) {
  static const std::string axes = "xyz";
  if (text.empty() || axes.find(text[0]) == std::string::npos)
    throw ConfigError("contour plane must start with x, y or z: '" + text + "'");
  diagnostics::PlaneSpec plane;
  plane.normal = axes.find(text[0]);
  if (text.size() == 1) {
    plane.index = grid.samples(plane.normal) / 2;  // the coordinate 0
  } else {
    const auto idx = parse_size_list(text.substr(1));
    if (idx.size() != 1) throw ConfigError("bad contour plane '" + text + "'");
    plane.index = idx[0];
  }
  if (plane.index >= grid.samples(plane.normal)) throw ConfigError("contour plane '" + text + "' is outside the grid");
  return plane;
}

}  // namespace pseudospec::cli
