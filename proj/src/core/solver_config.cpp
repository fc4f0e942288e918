#include "pseudospec/solver_config.hpp"

#include <cmath>
#include <numbers>

#include "pseudospec/errors.hpp"

namespace pseudospec {

void SolverConfig::validate() const {
  if (!(cfl > 0.0) || cfl > std::numbers::pi / 4.0) throw ConfigError("CFL number must lie in (0, pi/4]");
  if (!(dt_floor > 0.0)) throw ConfigError("dt floor must be positive");
  if (!(dt_ceiling >= dt_floor)) throw ConfigError("dt ceiling must not be below the dt floor");
  if (!std::isfinite(output_interval)) throw ConfigError("output interval must be finite");
}

}  // namespace pseudospec
