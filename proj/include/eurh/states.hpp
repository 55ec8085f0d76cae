#pragma once

#include <array>
#include <string>
#include <utility>

#include "eurh/linalg.hpp"

namespace eurh {

/// Correlation coefficients (c1, c2, c3) of a Bell-diagonal two-qubit state
///   rho = (1/4) (1 (x) 1 + sum_i c_i sigma_i (x) sigma_i).
struct BellParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  /// Weights of the four Bell projectors, in the order
  /// (1-c1-c2-c3, 1-c1+c2+c3, 1+c1-c2+c3, 1+c1+c2-c3) / 4.
  std::array<double, 4> bell_weights() const;

  bool physical(double tol = 1e-12) const;

  /// Throws DomainError naming the first negative Bell weight.
  void validate(double tol = 1e-12) const;

  /// Largest s in [0, 1] such that s * (c1, c2, c3) is physical; the point on
  /// the ray through the origin closest to the original coefficients.
  BellParams scaled_into_tetrahedron() const;

  std::string describe() const;

  friend bool operator==(const BellParams&, const BellParams&) = default;
};

/// A single Dirac mode of frequency omega seen at Hawking temperature T, and the
/// coefficients splitting its vacuum across the horizon.
struct HawkingMode {
  double omega = 1.0;
  double temperature = 0.0;
  double a = 1.0;  // vacuum amplitude kept outside the horizon
  double b = 0.0;  // amplitude paired with the interior mode

  static HawkingMode at(double omega, double temperature);
  double temperature_over_omega() const { return temperature / omega; }
};

/// a = 1/sqrt(1 + exp(-omega/T)), b = 1/sqrt(1 + exp(omega/T)); T = 0 gives the
/// exact limit (1, 0).
std::pair<double, double> hawking_coeffs(double omega, double temperature);

DensityMatrix bell_diagonal(const BellParams& params);

/// Maps qubit B of a two-qubit state onto the exterior/interior mode pair,
///   |0> -> a|0>_I |0>_II + b|1>_I |1>_II,   |1> -> |1>_I |0>_II,
/// returning the 8x8 state on A (x) B_I (x) B_II.
DensityMatrix embed_hawking(const DensityMatrix& rho_ab, const HawkingMode& mode);

/// Discards the interior mode: Tr_{B_II} of an A (x) B_I (x) B_II state.
DensityMatrix trace_region_ii(const DensityMatrix& rho_abb);

}  // namespace eurh
