#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pseudospec/field.hpp"
#include "pseudospec/filter.hpp"
#include "pseudospec/solver_config.hpp"
#include "pseudospec/spectral_ops.hpp"

// Inviscid Burgers equation u_t + (u^2/2)_x = 0 on [-pi, pi), periodic.

namespace pseudospec::burgers {

/// A smooth 2*pi-periodic initial profile together with its exact derivative.
class InitialCondition {
 public:
  enum class Kind { Sine, InverseSqrtSinSq, Custom };

  /// amplitude * sin(x).
  static InitialCondition sine(double amplitude = 1.0);
  /// (offset + sin^2 x)^(-1/2).
  static InitialCondition inverse_sqrt_sin_sq(double offset = 0.1);
  static InitialCondition custom(std::string name, std::function<double(double)> value,
                                 std::function<double(double)> derivative);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  double value(double x) const { return value_(x); }
  double derivative(double x) const { return derivative_(x); }

 private:
  InitialCondition(Kind kind, std::string name, std::function<double(double)> value,
                   std::function<double(double)> derivative);

  Kind kind_;
  std::string name_;
  std::function<double(double)> value_;
  std::function<double(double)> derivative_;
};

/// First shock time T = -1 / min u0'(x). The minimum is located by dense
/// sampling and refined with Brent's method. DomainError when u0' >= 0.
double shock_time(const InitialCondition& ic);

struct OracleOptions {
  double tolerance = 1e-13;    // required |F(u)| at every grid point
  int max_iterations = 50;
  std::size_t block_size = 256;  // continuation chains restart from u0 at each block
};

/// Exact solution of u = u0(x - t u) at every grid point, by safeguarded
/// Newton iteration. Points are processed in contiguous blocks, left to right
/// inside a block, each root seeding the next. Requires 0 <= t < shock_time.
/// OracleError (carrying x_j) if a point cannot be brought to tolerance.
PhysicalField exact_solution(const InitialCondition& ic, double t, const SpectralGrid& grid,
                             const OracleOptions& options = {});

/// |u_j - u0(x_j - t u_j)| at every grid point.
std::vector<double> oracle_residuals(const InitialCondition& ic, double t, const PhysicalField& u);

/// -d/dx (u^2/2) with the square formed pointwise and a filtered spectral derivative.
PhysicalField burgers_rhs(const PhysicalField& u, const FourierFilter& filter);

struct RunState {
  double t = 0.0;
  PhysicalField u;
  SolverConfig config;
  std::uint64_t step_count = 0;
};

/// One SSP-RK3 step of burgers_rhs followed by the solution filter.
/// InstabilityError if the result is not finite.
RunState step_rk3(const RunState& state, double dt);

/// dt = cfl * h / max(1, max|u|).
double time_step(const PhysicalField& u, double cfl);

struct ErrorReport {
  double t = 0.0;
  double l_inf = 0.0;
  /// Domain average (h / 2pi) * sum |e_j|.
  double l_1 = 0.0;
  std::vector<double> pointwise;
};

ErrorReport error_report(double t, const PhysicalField& numerical, const PhysicalField& exact);

struct SpectrumRow {
  long k = 0;
  double modulus = 0.0;
  double oracle_modulus = 0.0;
};

/// |u_hat_k| for k = 0..N.
std::vector<double> modulus_spectrum(const PhysicalField& u);
std::vector<SpectrumRow> spectrum_comparison(const PhysicalField& numerical, const PhysicalField& exact);

/// Largest K such that every mode k <= K agrees with the oracle within the
/// given factor. Modes whose oracle modulus is below `floor` times the largest
/// oracle modulus are skipped. Returns -1 if mode 0 already disagrees.
long accurate_band(std::span<const SpectrumRow> rows, double factor = 2.0, double floor = 1e-13);

struct Snapshot {
  RunState state;
  ErrorReport error;
  std::vector<SpectrumRow> spectrum;
};

/// Integrates from t = 0 and emits one snapshot at every requested output
/// time (ascending, each below the shock time). Steps follow time_step()
/// and the last step before each output is shortened to land on it exactly.
std::vector<Snapshot> run_burgers(const InitialCondition& ic, const SpectralGrid& grid,
                                  const FourierFilter& filter, std::span<const double> output_times,
                                  double cfl = 0.1);

/// Cached spectral tables for repeated right-hand-side evaluations on one grid.
/// The spectral overloads let a run keep its state in coefficient space
/// between steps, so the solution filter costs no extra transforms.
class BurgersOperator {
 public:
  BurgersOperator(const SpectralGrid& grid, const FourierFilter& filter);

  PhysicalField rhs(const PhysicalField& u) const;
  SpectralField rhs(const SpectralField& u_hat) const;
  void filter_in_place(SpectralField& u_hat) const;

 private:
  SpectralGrid grid_;
  ModeTables tables_;
  std::vector<double> derivative_symbol_;  // kappa * rho
};

}  // namespace pseudospec::burgers
