#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eurh/linalg.hpp"

namespace eurh {

/// Ordered single-qubit Kraus operators.
struct KrausChannel {
  std::string name;
  std::vector<ComplexMatrix> operators;
  bool trace_preserving = true;

  /// sum_k K_k^dagger K_k
  ComplexMatrix completeness() const;

  /// Throws ContractViolation unless the completeness relation holds (== 1 for
  /// trace-preserving channels, <= 1 otherwise) within `tol`.
  void check(double tol = 1e-12) const;

  /// sum_k K rho K^dagger on a single qubit.
  ComplexMatrix apply(const ComplexMatrix& rho_qubit) const;
};

/// Noise strength in [0, 1], optionally given through its decay exponent
/// x with strength = 1 - exp(-x) (p from delta*t, q from Gamma*t).
struct NoiseParams {
  double strength = 0.0;
  std::optional<double> decay_exponent;

  static NoiseParams direct(double strength);
  static NoiseParams from_decay_exponent(double exponent);
};

/// {sqrt(1-p) 1, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}
KrausChannel depolarizing_channel(double p);

/// {diag(1, sqrt(1-q)), diag(0, sqrt(q))}
KrausChannel phase_damping_channel(double q);

/// Single operator diag(1, sqrt(1-gamma)); not trace preserving.
KrausChannel weak_measurement(double gamma);

struct ChannelOutput {
  DensityMatrix state;
  double success_probability = 1.0;
};

/// Applies `channel` to the first qubit (A) of `rho`. A non-trace-preserving
/// channel is post-selected: the result is renormalised and its trace before
/// renormalisation is returned as the success probability. Throws
/// DegeneratePostSelection when that probability is <= 1e-14.
ChannelOutput apply_on_a(const DensityMatrix& rho, const KrausChannel& channel);

}  // namespace eurh
