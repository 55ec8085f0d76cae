#include "eurh/entropy.hpp"

#include <cmath>
#include <string>

#include "eurh/errors.hpp"

namespace eurh {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double spectrum_entropy(std::span<const double> spectrum) {
  double h = 0.0;
  for (double p : spectrum) {
    if (p < -kClipTol) throw ContractViolation("negative eigenvalue " + std::to_string(p) + " in entropy");
    h -= xlog2x(p);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(hermitian_eigenvalues(rho.matrix()));
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary entropy argument outside [0, 1]: " + std::to_string(x));
  return -xlog2x(x) - xlog2x(1.0 - x);
}

}  // namespace eurh
