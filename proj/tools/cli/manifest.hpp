#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pseudospec::cli {

inline constexpr const char* kManifestName = "manifest.json";

std::string sha256_hex(std::string_view bytes);
/// FileIntegrityError when the file cannot be read.
std::string sha256_file(const std::filesystem::path& path);

/// Creates `<root>/<experiment>-<UTC timestamp>-<first 8 hex of the config hash>`,
/// adding a numeric suffix if that name is taken.
std::filesystem::path make_run_directory(const std::filesystem::path& root, const std::string& experiment,
                                         const nlohmann::json& config);

/// Checksums every regular file under `dir` (except the manifest) and writes
/// manifest.json with the config snapshot, timings and status.
void write_manifest(const std::filesystem::path& dir, const std::string& experiment, const nlohmann::json& config,
                    const nlohmann::json& timings, const std::string& status);

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<std::string> problems;  // one line per missing, changed or unlisted file
  bool ok() const { return problems.empty(); }
};

/// FileIntegrityError if the manifest itself is missing or unreadable.
VerifyReport verify_run(const std::filesystem::path& dir);

}  // namespace pseudospec::cli
