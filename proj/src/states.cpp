#include "eurh/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "eurh/errors.hpp"

namespace eurh {

namespace {

// Signs (s1, s2, s3) of the Bell weights (1 + s1 c1 + s2 c2 + s3 c3) / 4.
constexpr std::array<std::array<double, 3>, 4> kWeightSigns{{
    {-1.0, -1.0, -1.0},
    {-1.0, +1.0, +1.0},
    {+1.0, -1.0, +1.0},
    {+1.0, +1.0, -1.0},
}};

constexpr std::array<const char*, 4> kWeightNames{
    "(1-c1-c2-c3)/4",
    "(1-c1+c2+c3)/4",
    "(1+c1-c2+c3)/4",
    "(1+c1+c2-c3)/4",
};

}  // namespace

std::array<double, 4> BellParams::bell_weights() const {
  std::array<double, 4> w{};
  for (std::size_t k = 0; k < 4; ++k)
    w[k] = 0.25 * (1.0 + kWeightSigns[k][0] * c1 + kWeightSigns[k][1] * c2 + kWeightSigns[k][2] * c3);
  return w;
}

bool BellParams::physical(double tol) const {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) return false;
  if (std::abs(c1) > 1.0 + tol || std::abs(c2) > 1.0 + tol || std::abs(c3) > 1.0 + tol) return false;
  const auto w = bell_weights();
  return std::all_of(w.begin(), w.end(), [tol](double x) { return x >= -tol; });
}

void BellParams::validate(double tol) const {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3))
    throw DomainError("Bell correlations must be finite: " + describe());
  if (std::abs(c1) > 1.0 + tol || std::abs(c2) > 1.0 + tol || std::abs(c3) > 1.0 + tol)
    throw DomainError("Bell correlations must satisfy |c_i| <= 1: " + describe());
  const auto w = bell_weights();
  for (std::size_t k = 0; k < 4; ++k) {
    if (w[k] < -tol) {
      std::ostringstream msg;
      msg << "unphysical Bell correlations " << describe() << ": weight " << kWeightNames[k] << " = " << w[k]
          << " is negative";
      throw DomainError(msg.str());
    }
  }
}

BellParams BellParams::scaled_into_tetrahedron() const {
  double s = 1.0;
  for (const auto& sign : kWeightSigns) {
    const double linear = sign[0] * c1 + sign[1] * c2 + sign[2] * c3;
    if (linear < -1.0) s = std::min(s, -1.0 / linear);
  }
  const double largest = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
  if (largest > 1.0) s = std::min(s, 1.0 / largest);
  return {s * c1, s * c2, s * c3};
}

std::string BellParams::describe() const {
  std::ostringstream out;
  out << '(' << c1 << ", " << c2 << ", " << c3 << ')';
  return out.str();
}

std::pair<double, double> hawking_coeffs(double omega, double temperature) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("mode frequency must be positive and finite");
  if (!(temperature >= 0.0)) throw DomainError("Hawking temperature must be non-negative");
  if (temperature == 0.0) return {1.0, 0.0};
  const double ratio = omega / temperature;
  // exp(ratio) may overflow to +inf for tiny T; 1/sqrt(inf) is the right limit.
  return {1.0 / std::sqrt(1.0 + std::exp(-ratio)), 1.0 / std::sqrt(1.0 + std::exp(ratio))};
}

HawkingMode HawkingMode::at(double omega, double temperature) {
  const auto [a, b] = hawking_coeffs(omega, temperature);
  return {omega, temperature, a, b};
}

DensityMatrix bell_diagonal(const BellParams& params) {
  params.validate();
  const ComplexMatrix one = pauli::identity();
  ComplexMatrix rho = tensor(one, one);
  rho += params.c1 * tensor(pauli::x(), pauli::x());
  rho += params.c2 * tensor(pauli::y(), pauli::y());
  rho += params.c3 * tensor(pauli::z(), pauli::z());
  rho *= 0.25;
  return DensityMatrix(std::move(rho));
}

DensityMatrix embed_hawking(const DensityMatrix& rho_ab, const HawkingMode& mode) {
  if (rho_ab.dim() != 4) throw StructuralError("embed_hawking expects a two-qubit state");
  // Isometry B -> B_I (x) B_II, columns indexed by the B basis state.
  ComplexMatrix w(4, 2);
  w(0, 0) = mode.a;  // |00>
  w(3, 0) = mode.b;  // |11>
  w(2, 1) = 1.0;     // |10>
  const ComplexMatrix iso = tensor(pauli::identity(), w);
  ComplexMatrix out = iso * rho_ab.matrix() * iso.adjoint();
  if (rho_ab.normalized()) return DensityMatrix(std::move(out));
  return DensityMatrix::unnormalized(std::move(out));
}

DensityMatrix trace_region_ii(const DensityMatrix& rho_abb) {
  if (rho_abb.dim() != 8) throw StructuralError("trace_region_ii expects an A (x) B_I (x) B_II state");
  constexpr std::array<std::size_t, 3> dims{2, 2, 2};
  constexpr std::array<std::size_t, 2> keep{0, 1};
  return partial_trace(rho_abb, dims, keep);
}

}  // namespace eurh
