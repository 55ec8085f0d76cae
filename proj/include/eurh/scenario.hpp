#pragma once

#include <optional>
#include <string>

#include "eurh/closed_form.hpp"
#include "eurh/linalg.hpp"
#include "eurh/states.hpp"

namespace eurh {

enum class NoiseKind { Depolarizing, PhaseDamping };

const char* to_string(NoiseKind kind);
/// Accepts "dp" / "depolarizing" and "pd" / "phase_damping"; ConfigError otherwise.
NoiseKind parse_noise_kind(const std::string& text);

/// One parameter point: Bell-diagonal input, noise of the given strength on A,
/// memory B at Hawking temperature T, and an optional weak measurement on A.
struct PointConfig {
  BellParams bell;
  NoiseKind noise = NoiseKind::Depolarizing;
  double strength = 0.0;
  double temperature = 0.0;
  double omega = 1.0;
  std::optional<double> gamma;
};

struct PipelineState {
  DensityMatrix rho;  // on A (x) B_I
  HawkingMode mode;
  double success_probability = 1.0;
};

/// Constructive path: bell_diagonal -> channel on A -> embed_hawking ->
/// trace_region_ii -> optional weak measurement on A.
PipelineState build_state(const PointConfig& config);

/// The same state from closed_form, without matrix algebra.
closed_form::PostSelected analytic_state(const PointConfig& config);

struct UncertaintyReport {
  double a = 1.0;
  double b = 0.0;
  double lhs_numeric = 0.0;
  double lhs_analytic = 0.0;
  std::optional<double> lhs_published;
  double bound_numeric = 0.0;
  double bound_analytic = 0.0;
  std::optional<double> bound_published;
  /// A literature form is available and differs from the numeric value by
  /// more than kPublishedTolerance (or is undefined at this point).
  bool published_mismatch = false;
  double conditional_entropy = 0.0;
  double discord = 0.0;
  double mixedness = 0.0;
  double success_probability = 1.0;
};

inline constexpr double kDualPathTolerance = 1e-9;
inline constexpr double kPublishedTolerance = 1e-9;

/// Evaluates both paths at one point. Throws ContractViolation when the
/// analytic and numeric values differ by more than kDualPathTolerance or when
/// the numeric left-hand side falls below its bound by more than that.
UncertaintyReport evaluate(const PointConfig& config);

}  // namespace eurh
