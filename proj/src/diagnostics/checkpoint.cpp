#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "pseudospec/diagnostics.hpp"
#include "pseudospec/errors.hpp"

namespace pseudospec::diagnostics {
namespace {

constexpr char kMagic[4] = {'S', 'P', 'L', '3'};
constexpr std::size_t kHeaderBytes = 4 + 4 + 3 * 8 + 3 * 8 + 8 + 8;

template <class T>
void put(std::string& buf, T v) {
  static_assert(sizeof(T) == 4 || sizeof(T) == 8);
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U bits = std::bit_cast<U>(v);
  for (std::size_t i = 0; i < sizeof(T); ++i) buf.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

template <class T>
T get(const unsigned char* p) {
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(p[i]) << (8 * i);
  return std::bit_cast<T>(bits);
}

}  // namespace

void write_checkpoint(const std::filesystem::path& path, const euler::VorticityState& state) {
  const SpectralGrid& grid = state.omega.grid();
  if (grid.rank() != 3 || state.omega.components() != 3)
    throw StructuralError("checkpoints hold a 3-component field on a 3D grid");

  std::string buf;
  buf.reserve(kHeaderBytes + 8 * state.omega.values().size());
  buf.append(kMagic, 4);
  put(buf, kCheckpointVersion);
  for (std::size_t d = 0; d < 3; ++d) put(buf, static_cast<std::uint64_t>(grid.samples(d)));
  for (std::size_t d = 0; d < 3; ++d) put(buf, grid.period(d));
  put(buf, state.t);
  put(buf, static_cast<std::uint64_t>(state.step_count));
  for (double v : state.omega.values()) put(buf, v);

  // Write to a sibling file and rename so a crash never leaves a torn checkpoint.
  std::filesystem::path tmp = path;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FileIntegrityError("cannot create " + tmp.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw FileIntegrityError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

euler::VorticityState read_checkpoint(const std::filesystem::path& path, const SolverConfig& config,
                                      const SpectralGrid* expected_grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileIntegrityError("cannot open checkpoint " + path.string());
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(buf.data());

  if (buf.size() < kHeaderBytes) throw FileIntegrityError("checkpoint truncated in header: " + path.string());
  if (std::memcmp(buf.data(), kMagic, 4) != 0) throw FileIntegrityError("bad checkpoint magic: " + path.string());
  const auto version = get<std::uint32_t>(p + 4);
  if (version != kCheckpointVersion)
    throw FileIntegrityError("unsupported checkpoint version " + std::to_string(version));

  std::size_t samples[3];
  double periods[3];
  for (std::size_t d = 0; d < 3; ++d) {
    const auto n = get<std::uint64_t>(p + 8 + 8 * d);
    if (n < 8 || n % 2 != 0 || n > (1u << 20)) throw FileIntegrityError("invalid checkpoint dims");
    samples[d] = static_cast<std::size_t>(n);
    periods[d] = get<double>(p + 32 + 8 * d);
  }
  const double t = get<double>(p + 56);
  const auto step = get<std::uint64_t>(p + 64);

  SpectralGrid grid = [&] {
    try {
      return SpectralGrid(samples, periods);
    } catch (const ConfigError& e) {
      throw FileIntegrityError(std::string("invalid checkpoint grid: ") + e.what());
    }
  }();
  if (expected_grid && !(grid == *expected_grid))
    throw FileIntegrityError("checkpoint grid does not match the configured grid");

  const std::size_t count = 3 * grid.point_count();
  if (buf.size() != kHeaderBytes + 8 * count)
    throw FileIntegrityError("checkpoint payload has " + std::to_string(buf.size() - kHeaderBytes) +
                             " bytes, expected " + std::to_string(8 * count));
  AlignedVector<double> data(count);
  for (std::size_t i = 0; i < count; ++i) data[i] = get<double>(p + kHeaderBytes + 8 * i);
  if (!std::isfinite(t)) throw FileIntegrityError("checkpoint time is not finite");

  return {t, PhysicalField(grid, 3, std::move(data)), config, step};
}

}  // namespace pseudospec::diagnostics
