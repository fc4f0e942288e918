#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pseudospec/burgers.hpp"
#include "pseudospec/errors.hpp"

namespace pseudospec::burgers {
namespace {

struct Bracket {
  double lo;
  double hi;
};

// F(u) = u - u0(x - t u) is strictly increasing before the shock time, so any
// interval covering the range of u0 brackets the root.
Bracket value_range(const InitialCondition& ic, const SpectralGrid& grid) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = 4 * grid.samples(0);
  const double h = grid.period(0) / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = ic.value(-0.5 * grid.period(0) + j * h);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double pad = 0.05 * (hi - lo) + 1e-3;
  return {lo - pad, hi + pad};
}

// Newton iteration u <- u - F/F' kept inside a shrinking bracket; a step that
// would leave the bracket becomes a bisection step.
bool solve_point(const InitialCondition& ic, double t, double x, double guess, Bracket bracket,
                 const OracleOptions& options, double& root) {
  double u = std::clamp(guess, bracket.lo, bracket.hi);
  double best = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int it = 0; it < 4 * options.max_iterations; ++it) {
    const double xi = x - t * u;
    const double f = u - ic.value(xi);
    if (std::abs(f) <= options.tolerance) {
      root = u;
      return true;
    }
    if (std::abs(f) < best) {
      best = std::abs(f);
      stalled = 0;
    } else if (++stalled >= options.max_iterations) {
      return false;
    }
    if (f > 0.0)
      bracket.hi = u;
    else
      bracket.lo = u;
    const double df = 1.0 + t * ic.derivative(xi);
    double next = df > 0.0 ? u - f / df : bracket.lo - 1.0;
    if (!(next > bracket.lo && next < bracket.hi)) next = 0.5 * (bracket.lo + bracket.hi);
    if (next == u) {
      root = u;
      return std::abs(f) <= options.tolerance;
    }
    u = next;
  }
  return false;
}

}  // namespace

PhysicalField exact_solution(const InitialCondition& ic, double t, const SpectralGrid& grid,
                             const OracleOptions& options) {
  if (grid.rank() != 1) throw StructuralError("Burgers oracle needs a 1D grid");
  PhysicalField out(grid, 1);
  auto u = out.component(0);
  const std::size_t n = grid.samples(0);

  if (t == 0.0) {
    for (std::size_t j = 0; j < n; ++j) u[j] = ic.value(grid.coordinate(0, j));
    return out;
  }
  if (!(t > 0.0) || !(t < shock_time(ic)))
    throw DomainError("oracle time must lie in [0, shock time), got " + std::to_string(t));

  const Bracket range = value_range(ic, grid);
  const std::size_t block = std::max<std::size_t>(1, options.block_size);
  for (std::size_t start = 0; start < n; start += block) {
    double guess = ic.value(grid.coordinate(0, start));
    for (std::size_t j = start; j < std::min(n, start + block); ++j) {
      const double x = grid.coordinate(0, j);
      double root = 0.0;
      if (!solve_point(ic, t, x, guess, range, options, root) &&
          !solve_point(ic, t, x, ic.value(x), range, options, root))
        throw OracleError("Newton iteration did not reach |F| <= tolerance at x = " + std::to_string(x), x);
      u[j] = root;
      guess = root;
    }
  }
  return out;
}

std::vector<double> oracle_residuals(const InitialCondition& ic, double t, const PhysicalField& u) {
  const auto values = u.component(0);
  std::vector<double> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double x = u.grid().coordinate(0, j);
    out[j] = std::abs(values[j] - ic.value(x - t * values[j]));
  }
  return out;
}

}  // namespace pseudospec::burgers
