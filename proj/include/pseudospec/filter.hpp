#pragma once

#include <string>
#include <string_view>

namespace pseudospec {

enum class FilterKind { Identity, SharpTwoThirds, ExponentialSmoothing };

/// Spectral cut-off function rho(|k|/N).
///
/// SharpTwoThirds keeps |k|/N <= 2/3 and zeroes the rest.
/// ExponentialSmoothing is exp(-alpha * x^order); the defaults alpha = order = 36
/// bring rho(1) to exp(-36) ~ 2.3e-16 while staying within 2e-5 of one on [0, 2/3].
/// Identity is rho == 1 and exists for exactness checks.
class FourierFilter {
 public:
  static FourierFilter identity() { return FourierFilter(FilterKind::Identity, 0.0, 0); }
  static FourierFilter sharp_two_thirds() { return FourierFilter(FilterKind::SharpTwoThirds, 0.0, 0); }
  /// Throws ConfigError unless alpha > 0 and order is a positive even integer.
  static FourierFilter exponential(double alpha = 36.0, int order = 36);

  /// Accepts "sharp23", "smooth36" and "identity".
  static FourierFilter parse(std::string_view name);

  FilterKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  int order() const noexcept { return order_; }
  std::string name() const;

  /// rho(x) for x in [0, 1]; DomainError otherwise.
  double value(double x) const;

  /// rho(|k|/n). The 2/3 test is done in integers so that modes sitting exactly
  /// on the cut-off are kept.
  double mode_factor(long k, long n) const;

  bool operator==(const FourierFilter&) const = default;

 private:
  FourierFilter(FilterKind kind, double alpha, int order) : kind_(kind), alpha_(alpha), order_(order) {}

  FilterKind kind_;
  double alpha_;
  int order_;
};

inline double filter_value(const FourierFilter& filter, double x) { return filter.value(x); }

}  // namespace pseudospec
