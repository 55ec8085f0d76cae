#pragma once

#include <cmath>
#include <random>

#include "eurh/linalg.hpp"
#include "eurh/states.hpp"

namespace eurh::fixtures {

/// Uniform draw from the physical tetrahedron by rejection.
inline BellParams random_bell(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    BellParams b{u(rng), u(rng), u(rng)};
    if (b.physical(0.0)) return b;
  }
}

/// Random X-state with complex anti-diagonal entries inside the positivity
/// limits |rho14|^2 <= rho11 rho44, |rho23|^2 <= rho22 rho33.
inline DensityMatrix random_xstate(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double d[4];
  double total = 0.0;
  for (double& x : d) total += (x = e(rng));
  for (double& x : d) x /= total;
  const double phase1 = 2.0 * M_PI * u(rng);
  const double phase2 = 2.0 * M_PI * u(rng);
  ComplexMatrix m = ComplexMatrix::diagonal(d);
  m(0, 3) = std::polar(u(rng) * std::sqrt(d[0] * d[3]), phase1);
  m(3, 0) = std::conj(m(0, 3));
  m(1, 2) = std::polar(u(rng) * std::sqrt(d[1] * d[2]), phase2);
  m(2, 1) = std::conj(m(1, 2));
  return DensityMatrix(std::move(m));
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// a drawn from its physical range [1/sqrt(2), 1].
inline double random_a(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(1.0 / std::sqrt(2.0), 1.0)(rng);
}

}  // namespace eurh::fixtures
