#include "eurh/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "eurh/errors.hpp"

namespace eurh {

namespace {

void require_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace

ComplexMatrix KrausChannel::completeness() const {
  ComplexMatrix sum(2, 2);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return sum;
}

void KrausChannel::check(double tol) const {
  if (operators.empty()) throw ContractViolation(name + ": channel has no Kraus operators");
  for (const auto& k : operators)
    if (k.rows() != 2 || k.cols() != 2) throw StructuralError(name + ": Kraus operators must be 2x2");
  const ComplexMatrix sum = completeness();
  if (trace_preserving) {
    if (max_abs_diff(sum, ComplexMatrix::identity(2)) > tol)
      throw ContractViolation(name + ": Kraus operators are not trace preserving");
  } else {
    const auto gap = hermitian_eigenvalues(ComplexMatrix::identity(2) - sum);
    if (gap.back() < -tol) throw ContractViolation(name + ": Kraus operators exceed the identity");
  }
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho_qubit) const {
  ComplexMatrix out(2, 2);
  for (const auto& k : operators) out += k * rho_qubit * k.adjoint();
  return out;
}

NoiseParams NoiseParams::direct(double strength) {
  require_unit_interval(strength, "noise strength");
  return {strength, std::nullopt};
}

NoiseParams NoiseParams::from_decay_exponent(double exponent) {
  if (!(exponent >= 0.0)) throw DomainError("decay exponent must be non-negative");
  return {-std::expm1(-exponent), exponent};
}

KrausChannel depolarizing_channel(double p) {
  require_unit_interval(p, "depolarizing strength p");
  const double keep = std::sqrt(1.0 - p);
  const double flip = std::sqrt(p / 3.0);
  KrausChannel ch{"depolarizing",
                  {keep * pauli::identity(), flip * pauli::x(), flip * pauli::y(), flip * pauli::z()},
                  true};
  ch.check();
  return ch;
}

KrausChannel phase_damping_channel(double q) {
  require_unit_interval(q, "phase damping strength q");
  const double k0[] = {1.0, std::sqrt(1.0 - q)};
  const double k1[] = {0.0, std::sqrt(q)};
  KrausChannel ch{"phase_damping", {ComplexMatrix::diagonal(k0), ComplexMatrix::diagonal(k1)}, true};
  ch.check();
  return ch;
}

KrausChannel weak_measurement(double gamma) {
  require_unit_interval(gamma, "weak measurement strength gamma");
  const double m[] = {1.0, std::sqrt(1.0 - gamma)};
  KrausChannel ch{"weak_measurement", {ComplexMatrix::diagonal(m)}, false};
  ch.check();
  return ch;
}

ChannelOutput apply_on_a(const DensityMatrix& rho, const KrausChannel& channel) {
  if (rho.dim() % 2 != 0) throw StructuralError("state dimension must be divisible by 2");
  const ComplexMatrix rest = ComplexMatrix::identity(rho.dim() / 2);

  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto& k : channel.operators) {
    const ComplexMatrix lifted = tensor(k, rest);
    out += lifted * rho.matrix() * lifted.adjoint();
  }

  if (channel.trace_preserving) {
    if (!rho.normalized()) return {DensityMatrix::unnormalized(std::move(out)), 1.0};
    return {DensityMatrix(std::move(out)), 1.0};
  }

  // Rounding can push the trace of a normalised input a hair above 1.
  const double success = std::min(out.trace().real(), 1.0);
  if (!(success > 1e-14)) {
    throw DegeneratePostSelection(channel.name + ": success probability " + std::to_string(success) +
                                  " vanishes");
  }
  out *= 1.0 / success;
  return {DensityMatrix(std::move(out)), success};
}

}  // namespace eurh
