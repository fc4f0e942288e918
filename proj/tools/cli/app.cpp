#include "app.hpp"

#include <CLI11.hpp>

#include "manifest.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/version.hpp"

namespace pseudospec::cli {
namespace {

int exit_code(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->category()) {
      case ErrorCategory::Config:
        return kExitConfig;
      case ErrorCategory::Instability:
      case ErrorCategory::Oracle:
        return kExitInstability;
      case ErrorCategory::FileIntegrity:
      case ErrorCategory::DataIntegrity:
        return kExitIntegrity;
      default:
        return kExitFailure;
    }
  }
  return kExitFailure;
}

std::array<std::size_t, 3> parse_dims(const std::string& text) {
  const auto v = parse_size_list(text);
  if (v.size() != 3) throw ConfigError("--dims needs three comma-separated sample counts");
  return {v[0], v[1], v[2]};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-spectral Burgers and 3D Euler experiments", "pseudospec"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_root = "runs";
  std::string dims;
  std::string filter;
  std::string restart;
  std::string ic;
  std::string resolutions;
  std::string run_dir;
  double t_end = -1.0;
  bool have_resolutions = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_root, "Root directory for run directories")->capture_default_str();
  };

  CLI::App* profile = app.add_subcommand("filter-profile", "Tabulate both filter profiles on [0, 1]");
  profile->add_option("--out", out_root, "Root directory for run directories")->capture_default_str();

  CLI::App* burg = app.add_subcommand("burgers", "Burgers convergence matrix against the exact solution");
  common(burg);
  burg->add_option("--ic", ic, "Initial condition")->check(CLI::IsMember({"sine", "inverse-sqrt"}));
  burg->add_option("--filter", filter, "Run a single filter")->check(CLI::IsMember({"sharp23", "smooth36"}));
  burg->add_option("--resolutions", resolutions, "Comma-separated N values")
      ->each([&](const std::string&) { have_resolutions = true; });

  CLI::App* eul = app.add_subcommand("euler", "3D vortex-tube experiment");
  common(eul);
  eul->add_option("--dims", dims, "Samples per axis, e.g. 64,64,128");
  eul->add_option("--t-end", t_end, "Final time");
  eul->add_option("--filter", filter, "Run a single filter")->check(CLI::IsMember({"sharp23", "smooth36"}));
  eul->add_option("--restart", restart, "Continue from a checkpoint")->check(CLI::ExistingFile);

  CLI::App* ver = app.add_subcommand("verify", "Recompute a run directory's checksums");
  ver->add_option("run_dir", run_dir, "Run directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Settings settings = config_path.empty() ? Settings{} : load_settings(config_path);
    if (*profile) {
      cmd_filter_profile(out_root, out);
    } else if (*burg) {
      if (!ic.empty()) settings.burgers.ic = ic;
      if (!filter.empty()) settings.burgers.filters = {filter};
      if (have_resolutions) settings.burgers.resolutions = parse_size_list(resolutions);
      cmd_burgers(settings.burgers, out_root, out);
    } else if (*eul) {
      if (!dims.empty()) settings.euler.dims = parse_dims(dims);
      if (t_end >= 0.0) settings.euler.t_end = t_end;
      if (eul->count("--t-end") && t_end < 0.0) throw ConfigError("--t-end must be non-negative");
      if (!filter.empty()) settings.euler.filters = {filter};
      if (!restart.empty()) settings.euler.restart = restart;
      cmd_euler(settings.euler, out_root, out);
    } else if (*ver) {
      const VerifyReport report = verify_run(run_dir);
      for (const auto& p : report.problems) out << p << '\n';
      out << report.checked << " artifacts checked, " << report.problems.size() << " problems\n";
      return report.ok() ? kExitOk : kExitIntegrity;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return kExitOk;
}

}  // namespace pseudospec::cli
