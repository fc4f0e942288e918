#pragma once

#include <cstdint>
#include <numbers>

#include "pseudospec/errors.hpp"
#include "pseudospec/field.hpp"
#include "pseudospec/filter.hpp"
#include "pseudospec/solver_config.hpp"
#include "pseudospec/spectral_ops.hpp"

namespace pseudospec::euler {

/// Vorticity on a 3D periodic box at time t.
struct VorticityState {
  double t = 0.0;
  PhysicalField omega;
  SolverConfig config;
  std::uint64_t step_count = 0;
};

/// Two antiparallel vortex tubes running along y, one above and one below the
/// plane z = 0. The upper centerline is x = d(y), z = separation - d(y) with
/// d(y) = amplitude * cos(2 pi y / wavelength); the lower one is its mirror
/// image. Core profile f(q) = exp(-p q^2 / (1 - q^2)) for q = r / radius < 1.
struct TubeParams {
  double core_radius = 2.0;
  double separation = 2.5;
  double peak_vorticity = 1.0;
  double perturbation_amplitude = 0.5;
  double perturbation_wavelength = 4.0 * std::numbers::pi;
  double profile_exponent = 2.0;

  /// ConfigError unless separation > radius > amplitude >= 0, the wavelength
  /// divides the y period, and both tubes fit inside the box.
  void validate(const SpectralGrid& grid) const;
};

double tube_profile(double q, double exponent);

/// Samples the tubes, then removes the discrete divergence once in spectral space.
VorticityState make_tube_initial_data(const TubeParams& params, const SpectralGrid& grid,
                                      const SolverConfig& config = {});

/// v_hat <- v_hat - kappa (kappa . v_hat) / |kappa|^2 for every nonzero kappa.
void project_divergence_free(SpectralField& v_hat);
PhysicalField project_divergence_free(const PhysicalField& v);

/// sqrt(sum |kappa . v_hat|^2) / sqrt(sum |kappa|^2 |v_hat|^2); 0 for a field
/// with no nonzero-wavenumber content.
double divergence_residual(const SpectralField& v_hat);
double divergence_residual(const PhysicalField& v);

/// Velocity rho * (i kappa x omega_hat / |kappa|^2), psi_hat(0) = 0.
SpectralField vorticity_to_velocity(const SpectralField& omega_hat, const FourierFilter& filter);
PhysicalField vorticity_to_velocity(const PhysicalField& omega, const FourierFilter& filter);

/// Spectral curl with rho applied to each derivative.
SpectralField curl(const SpectralField& v_hat, const FourierFilter& filter = FourierFilter::identity());
PhysicalField curl(const PhysicalField& v, const FourierFilter& filter = FourierFilter::identity());

/// -(u . grad) omega + (grad u) . omega, with ((grad u) . omega)_i = sum_j omega_j du_i/dx_j.
PhysicalField euler_rhs(const PhysicalField& omega, const FourierFilter& filter);

/// Spectral-space evaluation with tables cached for one grid and filter.
///
/// Every physical quantity entering the products carries one factor of rho:
/// omega and u are filtered, and their gradients are filtered derivatives.
/// The assembled right-hand side is filtered again, so with the sharp filter
/// nothing outside the retained band is ever fed back.
class EulerOperator {
 public:
  EulerOperator(const SpectralGrid& grid, const FourierFilter& filter);

  const SpectralGrid& grid() const noexcept { return grid_; }

  SpectralField velocity(const SpectralField& omega_hat) const;
  /// Largest pointwise |u| of the filtered velocity.
  double max_velocity(const SpectralField& omega_hat) const;
  SpectralField rhs(const SpectralField& omega_hat) const;
  void filter_in_place(SpectralField& omega_hat) const;

 private:
  SpectralGrid grid_;
  FourierFilter filter_;
  ModeTables tables_;
};

/// Re-projection trigger for the vorticity after a step.
inline constexpr double kReprojectThreshold = 1e-11;

/// Classical RK4 on euler_rhs, then the solution filter, then a projection if
/// the divergence residual exceeds kReprojectThreshold. InstabilityError on
/// non-finite values.
VorticityState step_rk4(const VorticityState& state, double dt);

/// cfl * min spacing / max(|u|_inf, 1e-8), capped at the configured ceiling.
/// InstabilityError when the result falls below the floor.
double adaptive_dt(double max_velocity, double min_spacing, const SolverConfig& config);
double adaptive_dt(const VorticityState& state);

/// Largest violations of the mirror symmetries, relative to max |omega|:
///   z -> -z : omega_x, omega_y odd, omega_z even
///   y -> -y : omega_x odd, omega_y even, omega_z odd
struct SymmetryResiduals {
  double dividing_plane = 0.0;
  double symmetry_x = 0.0;
  double symmetry_y = 0.0;
  double symmetry_z = 0.0;

  double max() const;
};

SymmetryResiduals symmetry_residuals(const PhysicalField& omega);

/// Callbacks from run_euler. Observers only read.
class RunObserver {
 public:
  virtual ~RunObserver() = default;
  /// `dt` is the adaptive step of this state before any clipping to an output time.
  virtual void on_output(const VorticityState& /*state*/, double /*dt*/) {}
  virtual void on_reprojection(double /*t*/, std::uint64_t /*step*/, double /*residual*/) {}
  /// Last good state before an InstabilityError propagates.
  virtual void on_failure(const VorticityState& /*last_good*/, const InstabilityError& /*error*/) {}
};

/// Steps with adaptive_dt from state0 to t_end, landing exactly on every
/// multiple of the output interval and on t_end. The state is passed through
/// physical space at each output, so a run restarted from an emitted state
/// continues bit-identically.
VorticityState run_euler(const VorticityState& state0, double t_end, RunObserver* observer = nullptr);

}  // namespace pseudospec::euler
