#pragma once

#include "pseudospec/field.hpp"

namespace pseudospec {

/// u_hat_k = 1/(2N) sum_j u(x_j) exp(-i k x_j) per dimension, with the grid's
/// coordinates x_j = -L/2 + j h. Deterministic for a fixed input.
SpectralField forward_transform(const PhysicalField& field);

/// u(x_j) = sum_k u_hat_k exp(i k x_j). The self-conjugate planes of the half
/// spectrum are checked for Hermitian symmetry first; a violation larger than
/// 1e-12 relative to the largest coefficient raises DataIntegrityError.
PhysicalField inverse_transform(const SpectralField& field);

namespace detail {

// Raw single-component transforms used on solver hot paths. Same conventions
// as above, without shape checks or the Hermitian check.
void forward_into(const SpectralGrid& grid, std::span<const double> in, std::span<Complex> out);
void inverse_into(const SpectralGrid& grid, std::span<const Complex> in, std::span<double> out);

/// Largest Hermitian-symmetry defect of the self-conjugate planes, relative to
/// the largest coefficient magnitude (0 for an all-zero spectrum).
double hermitian_defect(const SpectralGrid& grid, std::span<const Complex> coefficients);

}  // namespace detail
}  // namespace pseudospec
