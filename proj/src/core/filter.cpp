#include "pseudospec/filter.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "pseudospec/errors.hpp"

namespace pseudospec {

FourierFilter FourierFilter::exponential(double alpha, int order) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ConfigError("smoothing filter needs alpha > 0");
  if (order <= 0 || order % 2 != 0)
    throw ConfigError("smoothing filter order must be a positive even integer");
  return FourierFilter(FilterKind::ExponentialSmoothing, alpha, order);
}

FourierFilter FourierFilter::parse(std::string_view name) {
  if (name == "sharp23") return sharp_two_thirds();
  if (name == "smooth36") return exponential(36.0, 36);
  if (name == "identity" || name == "none") return identity();
  throw ConfigError("unknown filter '" + std::string(name) + "' (expected sharp23 or smooth36)");
}

std::string FourierFilter::name() const {
  switch (kind_) {
    case FilterKind::Identity:
      return "identity";
    case FilterKind::SharpTwoThirds:
      return "sharp23";
    case FilterKind::ExponentialSmoothing:
      if (alpha_ == 36.0 && order_ == 36) return "smooth36";
      return "smooth-a" + std::to_string(alpha_) + "-m" + std::to_string(order_);
  }
  return "unknown";
}

double FourierFilter::value(double x) const {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError("filter argument must lie in [0, 1], got " + std::to_string(x));
  switch (kind_) {
    case FilterKind::Identity:
      return 1.0;
    case FilterKind::SharpTwoThirds:
      return 3.0 * x <= 2.0 ? 1.0 : 0.0;
    case FilterKind::ExponentialSmoothing:
      return std::exp(-alpha_ * std::pow(x, order_));
  }
  return 1.0;
}

double FourierFilter::mode_factor(long k, long n) const {
  const long ak = std::labs(k);
  switch (kind_) {
    case FilterKind::Identity:
      return 1.0;
    case FilterKind::SharpTwoThirds:
      return 3 * ak <= 2 * n ? 1.0 : 0.0;
    case FilterKind::ExponentialSmoothing:
      return value(static_cast<double>(ak) / static_cast<double>(n));
  }
  return 1.0;
}

}  // namespace pseudospec
