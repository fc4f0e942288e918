#include <algorithm>
#include <cmath>
#include <string>

#include "pseudospec/burgers.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/time_integrators.hpp"
#include "pseudospec/transform.hpp"

namespace pseudospec::burgers {

BurgersOperator::BurgersOperator(const SpectralGrid& grid, const FourierFilter& filter)
    : grid_(grid), tables_(ModeTables::build(grid, filter)) {
  if (grid.rank() != 1) throw StructuralError("Burgers solver needs a 1D grid");
  const auto& kappa = tables_.wavenumber[2];
  const auto& rho = tables_.filter[2];
  derivative_symbol_.resize(kappa.size());
  for (std::size_t i = 0; i < kappa.size(); ++i) derivative_symbol_[i] = kappa[i] * rho[i];
}

PhysicalField BurgersOperator::rhs(const PhysicalField& u) const {
  return inverse_transform(rhs(forward_transform(u)));
}

SpectralField BurgersOperator::rhs(const SpectralField& u_hat) const {
  PhysicalField flux(grid_, 1);
  auto f = flux.component(0);
  detail::inverse_into(grid_, u_hat.component(0), f);
  for (double& v : f) v = 0.5 * v * v;

  SpectralField out(grid_, 1);
  auto spec = out.component(0);
  detail::forward_into(grid_, f, spec);
  // -(i kappa rho) f_hat
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= Complex(0.0, -derivative_symbol_[i]);
  return out;
}

void BurgersOperator::filter_in_place(SpectralField& u_hat) const {
  auto spec = u_hat.component(0);
  const auto& rho = tables_.filter[2];
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= rho[i];
}

PhysicalField burgers_rhs(const PhysicalField& u, const FourierFilter& filter) {
  if (u.components() != 1) throw StructuralError("Burgers right-hand side needs a scalar field");
  return BurgersOperator(u.grid(), filter).rhs(u);
}

namespace {

void check_finite(const SpectralField& u_hat, double t, std::uint64_t step) {
  for (const Complex& v : u_hat.values())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InstabilityError("non-finite Burgers solution after step " + std::to_string(step), t, step);
}

SpectralField advance(const SpectralField& u_hat, double dt, const BurgersOperator& op) {
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  SpectralField next =
      ssp_rk3_step(u_hat, dt, [&op](const SpectralField& v) { return op.rhs(v); });
  op.filter_in_place(next);
  return next;
}

}  // namespace

RunState step_rk3(const RunState& state, double dt) {
  const BurgersOperator op(state.u.grid(), state.config.filter);
  const SpectralField next = advance(forward_transform(state.u), dt, op);
  check_finite(next, state.t + dt, state.step_count + 1);
  return {state.t + dt, inverse_transform(next), state.config, state.step_count + 1};
}

double time_step(const PhysicalField& u, double cfl) {
  return cfl * u.grid().spacing(0) / std::max(1.0, u.max_norm());
}

ErrorReport error_report(double t, const PhysicalField& numerical, const PhysicalField& exact) {
  if (!(numerical.grid() == exact.grid()))
    throw StructuralError("error report needs both fields on the same grid");
  const auto a = numerical.component(0);
  const auto b = exact.component(0);
  ErrorReport report;
  report.t = t;
  report.pointwise.resize(a.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double e = std::abs(a[j] - b[j]);
    report.pointwise[j] = e;
    report.l_inf = std::max(report.l_inf, e);
    sum += e;
  }
  report.l_1 = sum / static_cast<double>(a.size());
  return report;
}

std::vector<double> modulus_spectrum(const PhysicalField& u) {
  const SpectralField spec = forward_transform(u);
  const auto c = spec.component(0);
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = std::abs(c[k]);
  return out;
}

std::vector<SpectrumRow> spectrum_comparison(const PhysicalField& numerical, const PhysicalField& exact) {
  const auto a = modulus_spectrum(numerical);
  const auto b = modulus_spectrum(exact);
  std::vector<SpectrumRow> rows(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) rows[k] = {static_cast<long>(k), a[k], b[k]};
  return rows;
}

long accurate_band(std::span<const SpectrumRow> rows, double factor, double floor) {
  double scale = 0.0;
  for (const auto& r : rows) scale = std::max(scale, r.oracle_modulus);
  long last = -1;
  for (const auto& r : rows) {
    if (r.oracle_modulus <= floor * scale) {
      last = r.k;
      continue;
    }
    const double ratio = r.modulus / r.oracle_modulus;
    if (!(ratio <= factor && ratio >= 1.0 / factor)) break;
    last = r.k;
  }
  return last;
}

std::vector<Snapshot> run_burgers(const InitialCondition& ic, const SpectralGrid& grid,
                                  const FourierFilter& filter, std::span<const double> output_times,
                                  double cfl) {
  if (output_times.empty()) throw ConfigError("run_burgers needs at least one output time");
  if (!(cfl > 0.0)) throw ConfigError("CFL number must be positive");
  if (!std::is_sorted(output_times.begin(), output_times.end()) || output_times.front() < 0.0)
    throw ConfigError("output times must be non-negative and ascending");
  if (output_times.back() > 0.0 && !(output_times.back() < shock_time(ic)))
    throw DomainError("output times must stay below the shock time");

  SolverConfig config;
  config.filter = filter;
  config.cfl = cfl;
  config.integrator = Integrator::SspRk3;

  const BurgersOperator op(grid, filter);
  const PhysicalField initial =
      PhysicalField::sample(grid, [&ic](std::span<const double> x) { return ic.value(x[0]); });
  SpectralField u_hat = forward_transform(initial);
  double t = 0.0;
  std::uint64_t steps = 0;
  PhysicalField u = initial;

  std::vector<Snapshot> out;
  for (double target : output_times) {
    while (t < target) {
      double dt = time_step(u, cfl);
      const bool last = t + dt >= target - 1e-12 * std::max(1.0, target);
      if (last) dt = target - t;
      u_hat = advance(u_hat, dt, op);
      t = last ? target : t + dt;
      ++steps;
      check_finite(u_hat, t, steps);
      detail::inverse_into(grid, u_hat.component(0), u.component(0));
    }
    const PhysicalField exact = exact_solution(ic, t, grid);
    RunState state{t, u, config, steps};
    out.push_back({state, error_report(t, u, exact), spectrum_comparison(u, exact)});
  }
  return out;
}

}  // namespace pseudospec::burgers
