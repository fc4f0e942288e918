#pragma once

#include <numbers>

#include "pseudospec/filter.hpp"

namespace pseudospec {

enum class Integrator { SspRk3, Rk4 };

/// Time-stepping parameters shared by both solvers.
struct SolverConfig {
  FourierFilter filter = FourierFilter::exponential();
  double cfl = std::numbers::pi / 4.0;
  Integrator integrator = Integrator::Rk4;
  /// Interval between diagnostic outputs; <= 0 means only initial and final.
  double output_interval = 0.5;
  double dt_floor = 1e-8;
  double dt_ceiling = 0.25;

  /// Throws ConfigError on a non-positive CFL number or inconsistent dt guards.
  void validate() const;
};

}  // namespace pseudospec
