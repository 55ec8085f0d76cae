#pragma once

#include <optional>

#include "eurh/linalg.hpp"

namespace eurh {

enum class DiscordBranch { L1, L2, Numeric };

const char* to_string(DiscordBranch branch);

struct MeasurementAngles {
  double theta = 0.0;
  double phi = 0.0;
};

struct DiscordResult {
  double discord = 0.0;
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  DiscordBranch branch_used = DiscordBranch::Numeric;
  /// Optimal Bloch axis of the measurement on B (numeric path only).
  std::optional<MeasurementAngles> angles;
};

/// Discord with the measurement on B, for X-shaped two-qubit states:
/// H_bin(rho22 + rho44) + sum chi log chi + min{L1, L2}. Ties go to L1.
/// Throws DomainError if an entry outside the X pattern exceeds 1e-12.
DiscordResult discord_xstate_closed_form(const DensityMatrix& rho);

/// sum_k p_k S(rho_A|k) for the projective measurement of B along the Bloch
/// axis (theta, phi).
double measured_conditional_entropy(const DensityMatrix& rho, double theta, double phi);

/// Discord by direct minimisation over B's measurement axis: a 64 x 128 grid
/// on (theta, phi) followed by coordinate descent down to a 1e-10 step.
DiscordResult discord_numeric(const DensityMatrix& rho);

double mutual_information(const DensityMatrix& rho);

struct MixednessResult {
  double mixedness = 0.0;
  double purity = 0.0;
  std::size_t dimension = 0;
};

/// d/(d-1) (1 - Tr rho^2).
MixednessResult mixedness(const DensityMatrix& rho);

}  // namespace eurh
