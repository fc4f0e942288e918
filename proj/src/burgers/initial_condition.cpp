#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "pseudospec/burgers.hpp"
#include "pseudospec/errors.hpp"

namespace pseudospec::burgers {

InitialCondition::InitialCondition(Kind kind, std::string name, std::function<double(double)> value,
                                   std::function<double(double)> derivative)
    : kind_(kind), name_(std::move(name)), value_(std::move(value)), derivative_(std::move(derivative)) {}

InitialCondition InitialCondition::sine(double amplitude) {
  return InitialCondition(
      Kind::Sine, "sine", [amplitude](double x) { return amplitude * std::sin(x); },
      [amplitude](double x) { return amplitude * std::cos(x); });
}

InitialCondition InitialCondition::inverse_sqrt_sin_sq(double offset) {
  if (!(offset > 0.0)) throw ConfigError("inverse-sqrt initial condition needs a positive offset");
  return InitialCondition(
      Kind::InverseSqrtSinSq, "inverse-sqrt",
      [offset](double x) {
        const double s = std::sin(x);
        return 1.0 / std::sqrt(offset + s * s);
      },
      [offset](double x) {
        const double s = std::sin(x);
        const double q = offset + s * s;
        return -s * std::cos(x) / (q * std::sqrt(q));
      });
}

InitialCondition InitialCondition::custom(std::string name, std::function<double(double)> value,
                                          std::function<double(double)> derivative) {
  return InitialCondition(Kind::Custom, std::move(name), std::move(value), std::move(derivative));
}

double shock_time(const InitialCondition& ic) {
  constexpr int kSamples = 8192;
  const double h = 2.0 * std::numbers::pi / kSamples;
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int j = 0; j < kSamples; ++j) {
    const double v = ic.derivative(-std::numbers::pi + j * h);
    if (v < best_value) {
      best_value = v;
      best = j;
    }
  }
  const double centre = -std::numbers::pi + best * h;
  const auto [x_min, d_min] = boost::math::tools::brent_find_minima(
      [&ic](double x) { return ic.derivative(x); }, centre - h, centre + h,
      std::numeric_limits<double>::digits);
  (void)x_min;
  const double slope = std::min(d_min, best_value);
  if (!(slope < 0.0)) throw DomainError("initial condition " + ic.name() + " never steepens into a shock");
  return -1.0 / slope;
}

}  // namespace pseudospec::burgers
