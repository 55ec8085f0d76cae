#pragma once

#include <span>

#include "eurh/linalg.hpp"

namespace eurh {

/// Eigenvalues in [-kClipTol, 0) are treated as zero before taking logs;
/// anything more negative is a broken state.
inline constexpr double kClipTol = 1e-10;

/// x log2 x with 0 log 0 = 0.
double xlog2x(double x);

/// -sum_i p_i log2 p_i over a spectrum, with the clipping rule above.
double spectrum_entropy(std::span<const double> spectrum);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// H(x) = -x log2 x - (1-x) log2 (1-x); DomainError outside [0, 1].
double binary_entropy(double x);

}  // namespace eurh
