#include "eurh/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "eurh/entropy.hpp"
#include "eurh/errors.hpp"

namespace eurh {

namespace {

void require_unit(const BlochVector& n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(norm - 1.0) > 1e-12) throw DomainError("observable Bloch vector must have unit length");
}

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw StructuralError("expected a two-qubit state");
}

constexpr std::size_t kQubitDims[] = {2, 2};

}  // namespace

double max_eigenvector_overlap(const BlochVector& first, const BlochVector& second) {
  require_unit(first);
  require_unit(second);
  const auto u = hermitian_eigen(pauli::along(first[0], first[1], first[2])).vectors;
  const auto v = hermitian_eigen(pauli::along(second[0], second[1], second[2])).vectors;
  double best = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Complex inner = 0.0;
      for (std::size_t k = 0; k < 2; ++k) inner += std::conj(u(k, i)) * v(k, j);
      best = std::max(best, std::norm(inner));
    }
  return best;
}

ObservablePair ObservablePair::make(const BlochVector& first, const BlochVector& second) {
  return {first, second, max_eigenvector_overlap(first, second)};
}

ObservablePair ObservablePair::pauli_xz() { return make({1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}); }

DensityMatrix dephase_after_measurement(const DensityMatrix& rho_ab, const BlochVector& observable) {
  require_two_qubit(rho_ab);
  require_unit(observable);
  const ComplexMatrix n_sigma = pauli::along(observable[0], observable[1], observable[2]);
  const ComplexMatrix one = pauli::identity();
  ComplexMatrix out(4, 4);
  for (double sign : {1.0, -1.0}) {
    const ComplexMatrix proj = tensor(0.5 * (one + sign * n_sigma), one);
    out += proj * rho_ab.matrix() * proj;
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix marginal_b(const DensityMatrix& rho_ab) {
  require_two_qubit(rho_ab);
  constexpr std::size_t keep[] = {1};
  return partial_trace(rho_ab, kQubitDims, keep);
}

DensityMatrix marginal_a(const DensityMatrix& rho_ab) {
  require_two_qubit(rho_ab);
  constexpr std::size_t keep[] = {0};
  return partial_trace(rho_ab, kQubitDims, keep);
}

double conditional_entropy(const DensityMatrix& rho_ab) {
  return von_neumann_entropy(rho_ab) - von_neumann_entropy(marginal_b(rho_ab));
}

double eur_lhs_numeric(const DensityMatrix& rho_ab, const ObservablePair& pair) {
  const double s_b = von_neumann_entropy(marginal_b(rho_ab));
  const double h_first = von_neumann_entropy(dephase_after_measurement(rho_ab, pair.first)) - s_b;
  const double h_second = von_neumann_entropy(dephase_after_measurement(rho_ab, pair.second)) - s_b;
  return h_first + h_second;
}

double eur_bound_numeric(const DensityMatrix& rho_ab, const ObservablePair& pair) {
  return conditional_entropy(rho_ab) + std::log2(1.0 / pair.overlap_c);
}

}  // namespace eurh
