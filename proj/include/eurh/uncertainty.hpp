#pragma once

#include <array>

#include "eurh/linalg.hpp"

namespace eurh {

using BlochVector = std::array<double, 3>;

/// Two single-qubit observables n.sigma measured on A, with the maximal
/// squared overlap c between their eigenvectors.
struct ObservablePair {
  BlochVector first{};
  BlochVector second{};
  double overlap_c = 0.5;

  /// Normalises nothing: both vectors must already be unit length (1e-12).
  static ObservablePair make(const BlochVector& first, const BlochVector& second);
  /// (sigma_x, sigma_z), c = 1/2.
  static ObservablePair pauli_xz();
};

/// Maximal |<psi_i|phi_j>|^2 over the eigenvectors of two qubit observables.
double max_eigenvector_overlap(const BlochVector& first, const BlochVector& second);

/// sum_e (Pi_e (x) 1) rho (Pi_e (x) 1) for the eigenprojectors Pi_e of n.sigma on A.
DensityMatrix dephase_after_measurement(const DensityMatrix& rho_ab, const BlochVector& observable);

/// Reduced state of B from a two-qubit state.
DensityMatrix marginal_b(const DensityMatrix& rho_ab);
DensityMatrix marginal_a(const DensityMatrix& rho_ab);

/// S(AB) - S(B).
double conditional_entropy(const DensityMatrix& rho_ab);

/// H(S|B) + H(R|B): left-hand side of the memory-assisted uncertainty relation.
double eur_lhs_numeric(const DensityMatrix& rho_ab, const ObservablePair& pair);

/// S(A|B) + log2(1/c): its lower bound.
double eur_bound_numeric(const DensityMatrix& rho_ab, const ObservablePair& pair);

}  // namespace eurh
