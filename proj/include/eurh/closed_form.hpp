#pragma once

// Closed-form route to the uncertainty quantities.
//
// Every state reached by the scenarios (Bell-diagonal input, a Hawking-split
// memory qubit, noise and weak measurement on A) is a real X-state, so its
// entries and all the entropies needed here have short closed forms. Nothing
// in this file diagonalises a matrix or applies a Kraus operator; it is the
// independent partner of the numeric pipeline in scenario.hpp.

#include <array>

#include "eurh/linalg.hpp"
#include "eurh/states.hpp"

namespace eurh::closed_form {

/// Real two-qubit X-state: diagonal rho_11..rho_44, anti-diagonal
/// rho_14 = rho_41 (outer) and rho_23 = rho_32 (inner).
struct XState {
  std::array<double, 4> diagonal{};
  double outer = 0.0;
  double inner = 0.0;

  ComplexMatrix matrix() const;
};

/// Depolarizing noise of strength p on A. The channel shrinks each c_i by
/// f = 1 - 4p/3 and leaves the B_I marginal alone.
XState depolarized(const BellParams& bell, double p, double a);

/// Phase damping of strength q on A: coherences scale by sqrt(1 - q).
XState dephased(const BellParams& bell, double q, double a);

struct PostSelected {
  XState state;
  double success_probability = 1.0;
};

/// Weak measurement diag(1, sqrt(1-gamma)) on A followed by renormalisation.
/// Throws DegeneratePostSelection when the success probability vanishes.
PostSelected weak_measured(const XState& x, double gamma);

/// Spectrum of the X-state, from its two 2x2 blocks.
std::array<double, 4> eigenvalues(const XState& x);

/// H(sigma_x|B) + H(sigma_z|B).
double lhs_xz(const XState& x);

/// S(A|B) + 1, the bound for (sigma_x, sigma_z).
double bound_xz(const XState& x);

/// (4/3)(1 - Tr rho^2).
double mixedness(const XState& x);

double u_dp(const BellParams& bell, double p, double a);
double ub_dp(const BellParams& bell, double p, double a);
double u_pd(const BellParams& bell, double q, double a);
double ub_pd(const BellParams& bell, double q, double a);
double u_qwm_dp(const BellParams& bell, double p, double a, double gamma);
double ub_qwm_dp(const BellParams& bell, double p, double a, double gamma);
double u_qwm_pd(const BellParams& bell, double q, double a, double gamma);
double ub_qwm_pd(const BellParams& bell, double q, double a, double gamma);

}  // namespace eurh::closed_form
