#include "eurh/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eurh/entropy.hpp"
#include "eurh/errors.hpp"
#include "eurh/uncertainty.hpp"

namespace eurh {

namespace {

constexpr double kXTolerance = 1e-12;

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw StructuralError("discord is defined here for two-qubit states only");
}

bool on_x_pattern(std::size_t i, std::size_t j) { return i == j || i + j == 3; }

double hbin(double x) { return binary_entropy(std::clamp(x, 0.0, 1.0)); }

// Entropy contribution p S(m / p) of an unnormalised 2x2 block m with trace p.
double weighted_qubit_entropy(Complex m00, Complex m01, Complex m11) {
  const double p = m00.real() + m11.real();
  if (p <= 0.0) return 0.0;
  const double r = std::hypot((m00.real() - m11.real()) / 2.0, std::abs(m01));
  const double hi = p / 2.0 + r;
  const double lo = std::max(p / 2.0 - r, 0.0);
  // p S(m/p) = -sum e log e + p log p
  return -xlog2x(hi) - xlog2x(lo) + xlog2x(p);
}

}  // namespace

const char* to_string(DiscordBranch branch) {
  switch (branch) {
    case DiscordBranch::L1: return "L1";
    case DiscordBranch::L2: return "L2";
    case DiscordBranch::Numeric: return "numeric";
  }
  return "?";
}

double mutual_information(const DensityMatrix& rho) {
  require_two_qubit(rho);
  return von_neumann_entropy(marginal_a(rho)) + von_neumann_entropy(marginal_b(rho)) - von_neumann_entropy(rho);
}

DiscordResult discord_xstate_closed_form(const DensityMatrix& rho) {
  require_two_qubit(rho);
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!on_x_pattern(i, j) && std::abs(m(i, j)) > kXTolerance)
        throw DomainError("state is not X-shaped");

  double d[4];
  for (std::size_t i = 0; i < 4; ++i) d[i] = m(i, i).real();
  const double r14 = std::abs(m(0, 3));
  const double r23 = std::abs(m(1, 2));

  double chi_term = 0.0;
  for (double chi : hermitian_eigenvalues(m)) chi_term += xlog2x(std::max(chi, 0.0));

  const double xi = (1.0 + std::sqrt(std::pow(1.0 - 2.0 * (d[2] + d[3]), 2) + 4.0 * std::pow(r14 + r23, 2))) / 2.0;
  const double l1 = hbin(xi);
  double l2 = -hbin(d[0] + d[2]);
  for (double v : d) l2 -= xlog2x(v);

  DiscordResult out;
  out.branch_used = l1 <= l2 ? DiscordBranch::L1 : DiscordBranch::L2;
  const double s_b = hbin(d[1] + d[3]);
  out.discord = s_b + chi_term + std::min(l1, l2);
  out.mutual_information = mutual_information(rho);
  out.classical_correlation = out.mutual_information - out.discord;
  return out;
}

double measured_conditional_entropy(const DensityMatrix& rho, double theta, double phi) {
  require_two_qubit(rho);
  const auto& m = rho.matrix();
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  double total = 0.0;
  for (double sign : {1.0, -1.0}) {
    // Projector (1 + sign n.sigma)/2 on B.
    const Complex proj[2][2] = {{0.5 * (1.0 + sign * nz), 0.5 * sign * Complex(nx, -ny)},
                                {0.5 * sign * Complex(nx, ny), 0.5 * (1.0 - sign * nz)}};
    Complex block[2][2] = {};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) block[i][j] += m(2 * i + k, 2 * j + l) * proj[l][k];
    total += weighted_qubit_entropy(block[0][0], block[0][1], block[1][1]);
  }
  return total;
}

DiscordResult discord_numeric(const DensityMatrix& rho) {
  require_two_qubit(rho);
  constexpr int kTheta = 64;
  constexpr int kPhi = 128;
  const double pi = std::numbers::pi;

  double best = measured_conditional_entropy(rho, 0.0, 0.0);
  double theta = 0.0;
  double phi = 0.0;
  for (int i = 0; i < kTheta; ++i) {
    const double t = pi * i / (kTheta - 1);
    for (int j = 0; j < kPhi; ++j) {
      const double f = 2.0 * pi * j / kPhi;
      const double v = measured_conditional_entropy(rho, t, f);
      if (v < best) {
        best = v;
        theta = t;
        phi = f;
      }
    }
  }

  double step = pi / (kTheta - 1);
  while (step > 1e-10) {
    bool moved = false;
    for (const auto& [dt, dp] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
      const double t = theta + dt * step;
      const double f = phi + dp * step;
      const double v = measured_conditional_entropy(rho, t, f);
      if (v < best) {
        best = v;
        theta = t;
        phi = f;
        moved = true;
      }
    }
    if (!moved) step /= 2.0;
  }

  DiscordResult out;
  out.branch_used = DiscordBranch::Numeric;
  out.angles = MeasurementAngles{theta, phi};
  const double s_b = von_neumann_entropy(marginal_b(rho));
  out.discord = s_b - von_neumann_entropy(rho) + best;
  out.mutual_information = mutual_information(rho);
  out.classical_correlation = out.mutual_information - out.discord;
  return out;
}

MixednessResult mixedness(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  double purity = 0.0;
  for (const Complex& z : m.entries()) purity += std::norm(z);
  const double d = static_cast<double>(rho.dim());
  return {d / (d - 1.0) * (1.0 - purity), purity, rho.dim()};
}

}  // namespace eurh
