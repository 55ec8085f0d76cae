#pragma once

// Literature closed forms, transcribed term by term and kept as printed.
//
// These are comparison fixtures, not the source of truth: several of them
// disagree with the constructive pipeline (see closed_form.hpp for the
// derived forms). Functions return NaN when a printed expression leaves the
// domain of an entropy (e.g. a negative "probability").

#include "eurh/linalg.hpp"
#include "eurh/states.hpp"

namespace eurh::published {

/// Printed traced state for the depolarizing scenario.
ComplexMatrix traced_state_dp(const BellParams& bell, double p, double a);
/// Printed traced state for the phase-damping scenario.
ComplexMatrix traced_state_pd(const BellParams& bell, double q, double a);
/// Printed post-weak-measurement state for the depolarizing scenario,
/// normaliser N = 1/(6(gamma - 2)).
ComplexMatrix weak_measured_state_dp(const BellParams& bell, double p, double a, double gamma);

double u_dp(const BellParams& bell, double p, double a);
/// Eigenvalues (eps +- tau)/12, (j +- l)/12.
double ub_dp(const BellParams& bell, double p, double a);
double u_pd(const BellParams& bell, double q, double a);
/// Eigenvalues (x +- y)/16, (s +- u)/16.
double ub_pd(const BellParams& bell, double q, double a);
double u_qwm_dp(const BellParams& bell, double p, double a, double gamma);
double u_qwm_pd(const BellParams& bell, double q, double a, double gamma);
double mixedness_qwm_dp(const BellParams& bell, double p, double a, double gamma);

}  // namespace eurh::published
