#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pseudospec/burgers.hpp"
#include "pseudospec/euler.hpp"

namespace pseudospec::diagnostics {

// ---------------------------------------------------------------- spectra

/// Sum over the shell s - 1/2 < |k| <= s + 1/2, with k the integer index
/// wavenumber vector (kappa_d * L_d / 2 pi).
struct ShellSpectrum {
  long k = 0;
  double value = 0.0;
};

/// Shell index of an index-space radius.
long shell_index(double radius);

/// E(s) = 1/2 sum_shell |u_hat|^2 over all components; sums to half the mean of |u|^2.
std::vector<ShellSpectrum> energy_spectrum(const SpectralField& u_hat);
/// Z(s) = sum_shell |omega_hat|^2 (no factor 1/2).
std::vector<ShellSpectrum> enstrophy_spectrum(const SpectralField& omega_hat);

// ---------------------------------------------------------------- records

struct DiagnosticRecord {
  double t = 0.0;
  double max_vorticity = 0.0;
  double max_velocity = 0.0;
  double energy = 0.0;     // 1/2 mean |u|^2
  double enstrophy = 0.0;  // mean |omega|^2
  double stretching_inf = 0.0;
  double loglog_vorticity = 0.0;  // NaN unless max_vorticity > 1
  double dt_used = 0.0;
};

/// Max over points with |omega| >= 1e-8 max|omega| of |xi . (grad u) . omega|,
/// xi = omega / |omega|. Velocity gradients are filtered spectral derivatives.
double stretching_diagnostic(const PhysicalField& omega, const PhysicalField& u, const FourierFilter& filter);

DiagnosticRecord compute_record(const euler::VorticityState& state, double dt_used);

struct GrowthSample {
  double t = 0.0;
  double max_vorticity = 0.0;
  double stretching = 0.0;
};

struct GrowthRow {
  double t = 0.0;
  double stretching = 0.0;
  double log_model = 0.0;     // c1 |omega| log |omega|
  double square_model = 0.0;  // c2 |omega|^2
};

struct GrowthTable {
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<GrowthRow> rows;
};

/// Scales both models to the stretching value of the first sample with
/// |omega| > 1 unless the constants are given. DomainError for an empty series
/// or when no such sample exists and a constant is missing.
GrowthTable growth_comparison(std::span<const GrowthSample> series, std::optional<double> c1 = {},
                              std::optional<double> c2 = {});

// ---------------------------------------------------------------- contours

/// Axis-aligned slice of a 3D grid: the plane normal to `normal` at grid index `index`.
struct PlaneSpec {
  std::size_t normal = 1;
  std::size_t index = 0;

  /// e.g. "y32".
  std::string name() const;
};

struct Polyline {
  double level = 0.0;
  bool closed = false;
  std::vector<std::array<double, 2>> points;
};

/// Marching-squares isolines of row-major values (rows along `b`, columns
/// along `a`) at one level. A vertex counts as inside when value >= level.
/// No periodic wrap.
std::vector<Polyline> contour_lines(std::span<const double> values, std::span<const double> a,
                                    std::span<const double> b, double level);

/// Isolines of one component on a slice. Vertices are (a, b) physical
/// coordinates of the two in-plane axes in increasing axis order.
std::vector<Polyline> contour_slice(const PhysicalField& field, std::size_t component, const PlaneSpec& plane,
                                    std::span<const double> levels);

// ---------------------------------------------------------------- csv

/// Decimal rendering with 17 significant digits (printf "%.17g" style).
std::string format_number(double v);
/// Shortest round-trip rendering used in file names, e.g. "0.985".
std::string time_tag(double t);

class CsvWriter {
 public:
  /// FileIntegrityError when the file cannot be created.
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  void row(std::span<const std::string> cells);
  void row(std::initializer_list<double> values);

 private:
  std::filesystem::path path_;
  std::size_t columns_;
  std::ofstream out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
};

/// FileIntegrityError on a missing file or ragged rows.
CsvTable read_csv(const std::filesystem::path& path);
double parse_number(std::string_view text);

// Burgers outputs.
struct BurgersCell {
  std::size_t n = 0;  // N, half the sample count
  std::string filter;
};
void append_errors(CsvWriter& errors_csv, const BurgersCell& cell, const burgers::Snapshot& snap);
std::vector<std::string> errors_header();
void write_pointwise(const std::filesystem::path& path, const burgers::Snapshot& snap);
void write_spectrum(const std::filesystem::path& path, const burgers::Snapshot& snap);

// Euler outputs.
std::vector<std::string> diagnostics_header();
void write_diagnostics(const std::filesystem::path& path, std::span<const DiagnosticRecord> records);
std::vector<DiagnosticRecord> read_diagnostics(const std::filesystem::path& path);
void write_shell_spectrum(const std::filesystem::path& path, const std::string& value_column,
                          std::span<const ShellSpectrum> spectrum);
void write_contours(const std::filesystem::path& path, std::span<const Polyline> lines);

// ---------------------------------------------------------------- checkpoints

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Little-endian: "SPL3", version u32, sample counts 3 x u64, periods 3 x f64,
/// t f64, step u64, then omega_x, omega_y, omega_z as C-order f64 arrays.
void write_checkpoint(const std::filesystem::path& path, const euler::VorticityState& state);

/// FileIntegrityError on a bad magic, unsupported version, invalid or
/// unexpected dims, or a truncated / oversized file.
euler::VorticityState read_checkpoint(const std::filesystem::path& path, const SolverConfig& config,
                                      const SpectralGrid* expected_grid = nullptr);

// ---------------------------------------------------------------- recorder

struct RecorderOptions {
  std::filesystem::path directory;
  bool spectra = true;
  bool checkpoints = true;
  std::vector<PlaneSpec> planes;
  /// Contour levels as fractions of the slice's max |value|.
  std::vector<double> level_fractions{0.2, 0.4, 0.6, 0.8};
  /// Component contoured on each plane.
  std::size_t contour_component = 1;
};

/// Writes diagnostics.csv (rewritten at every output), spectra, contours,
/// checkpoints and a reprojection log. On failure the last good state is
/// checkpointed as checkpoint_failure.bin.
class EulerRecorder : public euler::RunObserver {
 public:
  explicit EulerRecorder(RecorderOptions options);

  void on_output(const euler::VorticityState& state, double dt) override;
  void on_reprojection(double t, std::uint64_t step, double residual) override;
  void on_failure(const euler::VorticityState& last_good, const InstabilityError& error) override;

  const std::vector<DiagnosticRecord>& records() const noexcept { return records_; }
  const std::vector<std::filesystem::path>& files() const noexcept { return files_; }
  std::size_t reprojections() const noexcept { return reprojections_; }

 private:
  void note(const std::filesystem::path& p);

  RecorderOptions options_;
  std::vector<DiagnosticRecord> records_;
  std::vector<std::filesystem::path> files_;
  std::size_t reprojections_ = 0;
  std::unique_ptr<CsvWriter> events_;
};

}  // namespace pseudospec::diagnostics
