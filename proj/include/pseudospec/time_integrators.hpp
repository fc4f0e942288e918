#pragma once

#include <cstddef>

namespace pseudospec {

// Explicit Runge-Kutta steps for du/dt = L(u) on any field type exposing
// values() as a contiguous span. L must return a field of the same shape.

namespace detail {

// out = a*x + b*y, elementwise.
template <class Field>
Field combine(double a, const Field& x, double b, const Field& y) {
  Field out = x;
  auto o = out.values();
  const auto yv = y.values();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = a * o[i] + b * yv[i];
  return out;
}

}  // namespace detail

/// Three-stage strong-stability-preserving RK3 (Shu-Osher form):
///   u1 = u + dt L(u)
///   u2 = 3/4 u + 1/4 (u1 + dt L(u1))
///   u' = 1/3 u + 2/3 (u2 + dt L(u2))
template <class Field, class Rhs>
Field ssp_rk3_step(const Field& u, double dt, Rhs&& rhs) {
  const Field u1 = detail::combine(1.0, u, dt, rhs(u));
  const Field u1_adv = detail::combine(1.0, u1, dt, rhs(u1));
  const Field u2 = detail::combine(0.75, u, 0.25, u1_adv);
  const Field u2_adv = detail::combine(1.0, u2, dt, rhs(u2));
  return detail::combine(1.0 / 3.0, u, 2.0 / 3.0, u2_adv);
}

/// Classical four-stage RK4.
template <class Field, class Rhs>
Field rk4_step(const Field& u, double dt, Rhs&& rhs) {
  const Field k1 = rhs(u);
  const Field k2 = rhs(detail::combine(1.0, u, 0.5 * dt, k1));
  const Field k3 = rhs(detail::combine(1.0, u, 0.5 * dt, k2));
  const Field k4 = rhs(detail::combine(1.0, u, dt, k3));

  Field out = u;
  auto o = out.values();
  const auto a = k1.values();
  const auto b = k2.values();
  const auto c = k3.values();
  const auto d = k4.values();
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += w * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]);
  return out;
}

}  // namespace pseudospec
