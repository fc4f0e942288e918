#include <algorithm>
#include <cmath>
#include <string>

#include "pseudospec/errors.hpp"
#include "pseudospec/euler.hpp"
#include "pseudospec/time_integrators.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec::euler {
namespace {

constexpr double kVelocityFloor = 1e-8;

bool all_finite(const SpectralField& f) {
  for (const Complex& v : f.values())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

// One RK4 step plus filter and conditional projection. Returns the residual
// that triggered a projection, or 0.
double advance(SpectralField& omega_hat, double dt, const EulerOperator& op, double t,
               std::uint64_t step) {
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  omega_hat = rk4_step(omega_hat, dt, [&op](const SpectralField& w) { return op.rhs(w); });
  op.filter_in_place(omega_hat);
  if (!all_finite(omega_hat))
    throw InstabilityError("non-finite vorticity after step " + std::to_string(step), t, step);
  const double residual = divergence_residual(omega_hat);
  if (residual > kReprojectThreshold) {
    project_divergence_free(omega_hat);
    return residual;
  }
  return 0.0;
}

}  // namespace

VorticityState step_rk4(const VorticityState& state, double dt) {
  const EulerOperator op(state.omega.grid(), state.config.filter);
  SpectralField omega_hat = forward_transform(state.omega);
  advance(omega_hat, dt, op, state.t + dt, state.step_count + 1);
  return {state.t + dt, inverse_transform(omega_hat), state.config, state.step_count + 1};
}

double adaptive_dt(double max_velocity, double min_spacing, const SolverConfig& config) {
  const double dt = config.cfl * min_spacing / std::max(max_velocity, kVelocityFloor);
  if (!(dt >= config.dt_floor))
    throw InstabilityError("adaptive time step " + std::to_string(dt) + " fell below the floor", 0.0, 0);
  return std::min(dt, config.dt_ceiling);
}

double adaptive_dt(const VorticityState& state) {
  const EulerOperator op(state.omega.grid(), state.config.filter);
  return adaptive_dt(op.max_velocity(forward_transform(state.omega)), state.omega.grid().min_spacing(),
                     state.config);
}

VorticityState run_euler(const VorticityState& state0, double t_end, RunObserver* observer) {
  state0.config.validate();
  if (!(t_end >= state0.t)) throw ConfigError("t_end must not precede the initial time");
  const SpectralGrid& grid = state0.omega.grid();
  const EulerOperator op(grid, state0.config.filter);
  const double interval = state0.config.output_interval;
  const double h = grid.min_spacing();

  VorticityState state = state0;
  SpectralField omega_hat = forward_transform(state.omega);
  double dt = 0.0;

  auto step_size = [&]() {
    try {
      return adaptive_dt(op.max_velocity(omega_hat), h, state.config);
    } catch (const InstabilityError& e) {
      const InstabilityError located(e.what(), state.t, state.step_count);
      if (observer) observer->on_failure(state, located);
      throw located;
    }
  };

  dt = step_size();
  if (observer) observer->on_output(state, dt);

  // Output times are integer multiples of the interval, counted from zero so
  // that a restarted run hits the same instants.
  long next_index = interval > 0.0 ? static_cast<long>(std::floor(state.t / interval + 1e-9)) + 1 : 0;
  while (state.t < t_end) {
    double target = t_end;
    if (interval > 0.0) target = std::min(t_end, static_cast<double>(next_index) * interval);
    while (state.t < target) {
      const bool last = state.t + dt >= target - 1e-12 * std::max(1.0, target);
      const double h_step = last ? target - state.t : dt;
      const double t_next = last ? target : state.t + h_step;
      double residual = 0.0;
      try {
        residual = advance(omega_hat, h_step, op, t_next, state.step_count + 1);
      } catch (const InstabilityError& e) {
        if (observer) observer->on_failure(state, e);
        throw;
      }
      state.t = t_next;
      ++state.step_count;
      if (residual > 0.0 && observer) observer->on_reprojection(state.t, state.step_count, residual);
      if (!last) {
        detail::inverse_into(grid, omega_hat.component(0), state.omega.component(0));
        detail::inverse_into(grid, omega_hat.component(1), state.omega.component(1));
        detail::inverse_into(grid, omega_hat.component(2), state.omega.component(2));
        dt = step_size();
      }
    }
    // Pass through physical space so the emitted state fully determines the continuation.
    state.omega = inverse_transform(omega_hat);
    omega_hat = forward_transform(state.omega);
    dt = step_size();
    if (observer) observer->on_output(state, dt);
    if (interval > 0.0 && state.t >= static_cast<double>(next_index) * interval - 1e-12) ++next_index;
  }
  return state;
}

}  // namespace pseudospec::euler
