#pragma once

#include <filesystem>
#include <ostream>

#include "settings.hpp"

namespace pseudospec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitInstability = 3,
  kExitIntegrity = 4,
};

/// Each command creates a run directory under `out_root`, announces it on
/// `log`, and leaves a manifest there even when it fails. Solver and I/O
/// errors propagate after the manifest is written.
std::filesystem::path cmd_filter_profile(const std::filesystem::path& out_root, std::ostream& log);
std::filesystem::path cmd_burgers(const BurgersSettings& settings, const std::filesystem::path& out_root,
                                  std::ostream& log);
std::filesystem::path cmd_euler(const EulerSettings& settings, const std::filesystem::path& out_root,
                                std::ostream& log);

/// Command-line entry point; returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pseudospec::cli
