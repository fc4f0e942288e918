#include <charconv>
#include <limits>
#include <cmath>
#include <sstream>

#include "pseudospec/diagnostics.hpp"
#include "pseudospec/errors.hpp"

namespace pseudospec::diagnostics {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string time_tag(double t) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, t);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw FileIntegrityError("not a number: '" + std::string(text) + "'");
  return v;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), columns_(header.size()), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw FileIntegrityError("cannot create " + path.string());
  row(header);
}

void CsvWriter::row(std::span<const std::string> cells) {
  if (cells.size() != columns_)
    throw StructuralError("CSV row for " + path_.filename().string() + " has " + std::to_string(cells.size()) +
                          " cells, expected " + std::to_string(columns_));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  if (!out_) throw FileIntegrityError("write failed for " + path_.string());
}

void CsvWriter::row(std::initializer_list<double> values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_number(v));
  row(cells);
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw FileIntegrityError("missing CSV column '" + std::string(name) + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileIntegrityError("cannot open " + path.string());
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw FileIntegrityError("empty CSV file " + path.string());
  table.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != table.header.size())
      throw FileIntegrityError("ragged row in " + path.string());
    table.rows.push_back(std::move(cells));
  }
  return table;
}

// ---------------------------------------------------------------- Burgers

std::vector<std::string> errors_header() { return {"t", "N", "filter", "l_inf", "l_1"}; }

void append_errors(CsvWriter& errors_csv, const BurgersCell& cell, const burgers::Snapshot& snap) {
  const std::string cells[] = {format_number(snap.error.t), std::to_string(cell.n), cell.filter,
                               format_number(snap.error.l_inf), format_number(snap.error.l_1)};
  errors_csv.row(cells);
}

void write_pointwise(const std::filesystem::path& path, const burgers::Snapshot& snap) {
  CsvWriter csv(path, {"x", "error"});
  const SpectralGrid& grid = snap.state.u.grid();
  for (std::size_t j = 0; j < snap.error.pointwise.size(); ++j)
    csv.row({grid.coordinate(0, j), snap.error.pointwise[j]});
}

void write_spectrum(const std::filesystem::path& path, const burgers::Snapshot& snap) {
  CsvWriter csv(path, {"k", "modulus", "oracle_modulus"});
  for (const auto& r : snap.spectrum) {
    const std::string cells[] = {std::to_string(r.k), format_number(r.modulus), format_number(r.oracle_modulus)};
    csv.row(cells);
  }
}

// ---------------------------------------------------------------- Euler

std::vector<std::string> diagnostics_header() {
  return {"t", "max_vorticity", "max_velocity", "energy", "enstrophy", "stretching_inf", "dt_used"};
}

void write_diagnostics(const std::filesystem::path& path, std::span<const DiagnosticRecord> records) {
  CsvWriter csv(path, diagnostics_header());
  for (const auto& r : records)
    csv.row({r.t, r.max_vorticity, r.max_velocity, r.energy, r.enstrophy, r.stretching_inf, r.dt_used});
}

std::vector<DiagnosticRecord> read_diagnostics(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  const auto names = diagnostics_header();
  if (table.header != names) throw FileIntegrityError("unexpected diagnostics columns in " + path.string());
  std::vector<DiagnosticRecord> out;
  for (const auto& row : table.rows) {
    DiagnosticRecord r;
    r.t = parse_number(row[0]);
    r.max_vorticity = parse_number(row[1]);
    r.max_velocity = parse_number(row[2]);
    r.energy = parse_number(row[3]);
    r.enstrophy = parse_number(row[4]);
    r.stretching_inf = parse_number(row[5]);
    r.dt_used = parse_number(row[6]);
    r.loglog_vorticity =
        r.max_vorticity > 1.0 ? std::log(std::log(r.max_vorticity)) : std::numeric_limits<double>::quiet_NaN();
    out.push_back(r);
  }
  return out;
}

void write_shell_spectrum(const std::filesystem::path& path, const std::string& value_column,
                          std::span<const ShellSpectrum> spectrum) {
  CsvWriter csv(path, {"k", value_column});
  for (const auto& s : spectrum) {
    const std::string cells[] = {std::to_string(s.k), format_number(s.value)};
    csv.row(cells);
  }
}

void write_contours(const std::filesystem::path& path, std::span<const Polyline> lines) {
  CsvWriter csv(path, {"level", "polyline", "x", "y"});
  for (std::size_t id = 0; id < lines.size(); ++id)
    for (const auto& p : lines[id].points) {
      const std::string cells[] = {format_number(lines[id].level), std::to_string(id), format_number(p[0]),
                                   format_number(p[1])};
      csv.row(cells);
    }
}

}  // namespace pseudospec::diagnostics
