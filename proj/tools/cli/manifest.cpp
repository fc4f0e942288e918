#include "manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>
#include <set>

#include "pseudospec/errors.hpp"
#include "pseudospec/version.hpp"

namespace pseudospec::cli {
namespace {

using nlohmann::json;

class Digest {
 public:
  Digest() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
      throw FileIntegrityError("SHA-256 initialisation failed");
  }
  void update(const void* data, std::size_t n) {
    if (EVP_DigestUpdate(ctx_.get(), data, n) != 1) throw FileIntegrityError("SHA-256 update failed");
  }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), md, &len) != 1) throw FileIntegrityError("SHA-256 finalisation failed");
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(digits[md[i] >> 4]);
      out.push_back(digits[md[i] & 15]);
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

std::vector<std::filesystem::path> artifacts(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto rel = std::filesystem::relative(entry.path(), dir);
    if (rel == kManifestName || entry.path().extension() == ".part") continue;
    out.push_back(rel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Digest d;
  d.update(bytes.data(), bytes.size());
  return d.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileIntegrityError("cannot read " + path.string());
  Digest d;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) d.update(buf, static_cast<std::size_t>(in.gcount()));
  return d.hex();
}

std::filesystem::path make_run_directory(const std::filesystem::path& root, const std::string& experiment,
                                         const json& config) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &utc);
  const std::string base = experiment + "-" + stamp + "-" + sha256_hex(config.dump()).substr(0, 8);

  std::filesystem::create_directories(root);
  std::filesystem::path dir = root / base;
  for (int i = 1; std::filesystem::exists(dir); ++i) dir = root / (base + "." + std::to_string(i));
  std::filesystem::create_directories(dir);
  return dir;
}

void write_manifest(const std::filesystem::path& dir, const std::string& experiment, const json& config,
                    const json& timings, const std::string& status) {
  json files = json::array();
  for (const auto& rel : artifacts(dir)) {
    const auto full = dir / rel;
    files.push_back({{"path", rel.generic_string()},
                     {"sha256", sha256_file(full)},
                     {"bytes", std::filesystem::file_size(full)}});
  }
  const json manifest = {{"experiment", experiment}, {"version", kVersion}, {"status", status},
                         {"config", config},         {"timings", timings}, {"artifacts", files}};
  std::ofstream out(dir / kManifestName, std::ios::trunc);
  if (!out) throw FileIntegrityError("cannot write manifest in " + dir.string());
  out << manifest.dump(2) << '\n';
}

VerifyReport verify_run(const std::filesystem::path& dir) {
  std::ifstream in(dir / kManifestName);
  if (!in) throw FileIntegrityError("no manifest in " + dir.string());
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FileIntegrityError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!manifest.contains("artifacts") || !manifest["artifacts"].is_array())
    throw FileIntegrityError("manifest has no artifact list");

  VerifyReport report;
  std::set<std::string> listed;
  for (const auto& a : manifest["artifacts"]) {
    const std::string rel = a.value("path", "");
    const std::string expected = a.value("sha256", "");
    listed.insert(rel);
    ++report.checked;
    const auto full = dir / rel;
    if (!std::filesystem::is_regular_file(full)) {
      report.problems.push_back("missing: " + rel);
      continue;
    }
    if (sha256_file(full) != expected) report.problems.push_back("checksum drift: " + rel);
  }
  for (const auto& rel : artifacts(dir))
    if (!listed.count(rel.generic_string())) report.problems.push_back("not in manifest: " + rel.generic_string());
  return report;
}

}  // namespace pseudospec::cli
