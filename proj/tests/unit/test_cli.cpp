#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "manifest.hpp"
#include "pseudospec/errors.hpp"

using namespace pseudospec;
using namespace pseudospec::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pseudospec_cli_unit" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int invoke(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "pseudospec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

fs::path only_subdir(const fs::path& root) {
  std::vector<fs::path> dirs;
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory()) dirs.push_back(e.path());
  REQUIRE(dirs.size() == 1);
  return dirs.front();
}

}  // namespace

TEST_CASE("settings from json") {
  const json doc = json::parse(R"({"burgers": {"ic": "inverse-sqrt", "resolutions": [16, 32]},
                                   "euler": {"dims": [16, 16, 32], "tube": {"core_radius": 1.5}}})");
  const Settings s = settings_from_json(doc);
  CHECK(s.burgers.ic == "inverse-sqrt");
  CHECK(s.burgers.resolutions == std::vector<std::size_t>{16, 32});
  CHECK(s.burgers.cfl == 0.1);
  CHECK(s.euler.dims == std::array<std::size_t, 3>{16, 16, 32});
  CHECK(s.euler.tube.core_radius == 1.5);
  CHECK(s.euler.tube.separation == 2.5);

  CHECK_THROWS_AS(settings_from_json(json::parse(R"({"burger": {}})")), ConfigError);
  CHECK_THROWS_AS(settings_from_json(json::parse(R"({"euler": {"dimz": [8, 8, 8]}})")), ConfigError);
  CHECK_THROWS_AS(settings_from_json(json::parse(R"({"euler": {"t_end": "soon"}})")), ConfigError);
  CHECK_THROWS_AS(settings_from_json(json::parse(R"({"euler": {"tube": {"radius": 2}}})")), ConfigError);
}

TEST_CASE("settings validation") {
  EulerSettings e;
  CHECK_NOTHROW(validate(e));
  e.dims = {64, 63, 128};
  CHECK_THROWS_AS(validate(e), ConfigError);
  e = EulerSettings{};
  e.filters = {"box"};
  CHECK_THROWS_AS(validate(e), ConfigError);
  e = EulerSettings{};
  e.cfl = 2.0;
  CHECK_THROWS_AS(validate(e), ConfigError);

  BurgersSettings b;
  CHECK_NOTHROW(validate(b));
  b.resolutions = {};
  CHECK_THROWS_AS(validate(b), ConfigError);
  b = BurgersSettings{};
  b.ic = "gauss";
  CHECK_THROWS_AS(validate(b), ConfigError);
  b = BurgersSettings{};
  b.output_fractions = {0.5, 1.2};
  CHECK_THROWS_AS(validate(b), ConfigError);
}

TEST_CASE("list and plane parsing") {
  CHECK(parse_size_list("64,64,128") == std::vector<std::size_t>{64, 64, 128});
  CHECK(parse_size_list("").empty());
  CHECK_THROWS_AS(parse_size_list("64,x"), ConfigError);
  CHECK_THROWS_AS(parse_size_list("-4"), ConfigError);
  const SpectralGrid g = SpectralGrid::box({16, 16, 32});
  CHECK(parse_plane("y", g).index == 8);
  CHECK(parse_plane("z", g).index == 16);
  CHECK(parse_plane("x3", g).normal == 0);
  CHECK(parse_plane("x3", g).index == 3);
  CHECK_THROWS_AS(parse_plane("y16", g), ConfigError);
  CHECK_THROWS_AS(parse_plane("w", g), ConfigError);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("run directory naming") {
  const fs::path root = scratch("naming");
  const json config = {{"a", 1}};
  const fs::path a = make_run_directory(root, "demo", config);
  const fs::path b = make_run_directory(root, "demo", config);
  CHECK(a != b);
  const std::string name = a.filename().string();
  CHECK(name.rfind("demo-", 0) == 0);
  CHECK(name.substr(name.size() - 8) == sha256_hex(config.dump()).substr(0, 8));
  CHECK(name.size() == std::string("demo-20260101T000000Z-").size() + 8);
}

TEST_CASE("manifest and verification") {
  const fs::path root = scratch("manifest");
  const fs::path dir = make_run_directory(root, "demo", json::object());
  fs::create_directories(dir / "sub");
  std::ofstream(dir / "a.csv") << "x\n1\n";
  std::ofstream(dir / "sub" / "b.csv") << "y\n2\n";
  write_manifest(dir, "demo", json::object(), json::object(), "ok");

  const json m = json::parse(std::ifstream(dir / kManifestName));
  CHECK(m["status"] == "ok");
  CHECK(m["artifacts"].size() == 2);
  CHECK(verify_run(dir).ok());
  CHECK(verify_run(dir).checked == 2);

  std::ofstream(dir / "a.csv", std::ios::app) << "2\n";
  VerifyReport r = verify_run(dir);
  CHECK_FALSE(r.ok());
  CHECK(r.problems.size() == 1);

  write_manifest(dir, "demo", json::object(), json::object(), "ok");
  fs::remove(dir / "sub" / "b.csv");
  std::ofstream(dir / "extra.csv") << "z\n";
  r = verify_run(dir);
  CHECK(r.problems.size() == 2);

  CHECK_THROWS_AS(verify_run(root / "nothing"), FileIntegrityError);
}

TEST_CASE("filter-profile command") {
  const fs::path root = scratch("profile");
  std::string text;
  REQUIRE(invoke({"filter-profile", "--out", root.string()}, &text) == kExitOk);
  CHECK(text.find("run directory: ") != std::string::npos);
  const fs::path dir = only_subdir(root);
  std::ifstream in(dir / "filter_profile.csv");
  std::string line;
  std::size_t rows = 0;
  std::getline(in, line);
  CHECK(line == "x,rho_sharp,rho_smooth");
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 1026);
  CHECK(invoke({"verify", dir.string()}) == kExitOk);
}

TEST_CASE("exit codes") {
  const fs::path root = scratch("exits");
  CHECK(invoke({"euler", "--out", root.string(), "--dims", "64,63,128"}) == kExitConfig);
  CHECK(invoke({"euler", "--out", root.string(), "--dims", "64,64"}) == kExitConfig);
  CHECK(invoke({"burgers", "--out", root.string(), "--resolutions", ""}) == kExitConfig);
  CHECK(invoke({"burgers", "--out", root.string(), "--filter", "box"}) == kExitConfig);
  CHECK(invoke({"frobnicate"}) == kExitConfig);
  CHECK(invoke({}) == kExitConfig);
  CHECK(invoke({"--help"}) == kExitOk);

  const fs::path bad = root / "bad.json";
  std::ofstream(bad) << R"({"euler": {"nonsense": 1}})";
  CHECK(invoke({"euler", "--out", root.string(), "--config", bad.string()}) == kExitConfig);

  const fs::path ckpt = root / "broken.bin";
  std::ofstream(ckpt) << "not a checkpoint";
  CHECK(invoke({"euler", "--out", root.string(), "--dims", "16,16,32", "--restart", ckpt.string()}) ==
        kExitIntegrity);

  // Tubes that do not fit the box.
  std::ofstream(root / "tube.json") << R"({"euler": {"tube": {"separation": 5.0}}})";
  CHECK(invoke({"euler", "--out", root.string(), "--config", (root / "tube.json").string()}) == kExitConfig);
}
