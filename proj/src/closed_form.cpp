#include "eurh/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eurh/entropy.hpp"
#include "eurh/errors.hpp"

namespace eurh::closed_form {

namespace {

// Binary entropy tolerant of arguments a rounding error outside [0, 1].
double hbin(double x) { return binary_entropy(std::clamp(x, 0.0, 1.0)); }

double diagonal_entropy(const XState& x) {
  double h = 0.0;
  for (double d : x.diagonal) h -= xlog2x(d);
  return h;
}

double entropy_b(const XState& x) { return hbin(x.diagonal[0] + x.diagonal[2]); }

XState memory_split(const BellParams& bell, double contraction, double coherence, double a) {
  const double a2 = a * a;
  const double z = contraction * bell.c3;
  XState x;
  x.diagonal = {a2 * (1.0 + z) / 4.0, (2.0 - a2 * (1.0 + z)) / 4.0, a2 * (1.0 - z) / 4.0,
                (2.0 - a2 * (1.0 - z)) / 4.0};
  x.outer = coherence * contraction * a * (bell.c1 - bell.c2) / 4.0;
  x.inner = coherence * contraction * a * (bell.c1 + bell.c2) / 4.0;
  return x;
}

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

ComplexMatrix XState::matrix() const {
  ComplexMatrix m = ComplexMatrix::diagonal(diagonal);
  m(0, 3) = m(3, 0) = outer;
  m(1, 2) = m(2, 1) = inner;
  return m;
}

XState depolarized(const BellParams& bell, double p, double a) {
  require_unit_interval(p, "p");
  return memory_split(bell, 1.0 - 4.0 * p / 3.0, 1.0, a);
}

XState dephased(const BellParams& bell, double q, double a) {
  require_unit_interval(q, "q");
  return memory_split(bell, 1.0, std::sqrt(1.0 - q), a);
}

PostSelected weak_measured(const XState& x, double gamma) {
  require_unit_interval(gamma, "gamma");
  const double keep = 1.0 - gamma;
  const auto& d = x.diagonal;
  const double success = std::min(d[0] + d[1] + keep * (d[2] + d[3]), 1.0);
  if (!(success > 1e-14)) throw DegeneratePostSelection("weak measurement success probability vanishes");
  const double amp = std::sqrt(keep) / success;
  XState out;
  out.diagonal = {d[0] / success, d[1] / success, keep * d[2] / success, keep * d[3] / success};
  out.outer = amp * x.outer;
  out.inner = amp * x.inner;
  return {out, success};
}

std::array<double, 4> eigenvalues(const XState& x) {
  const auto& d = x.diagonal;
  const double r_outer = std::hypot((d[0] - d[3]) / 2.0, x.outer);
  const double r_inner = std::hypot((d[1] - d[2]) / 2.0, x.inner);
  const double m_outer = (d[0] + d[3]) / 2.0;
  const double m_inner = (d[1] + d[2]) / 2.0;
  return {m_outer + r_outer, m_outer - r_outer, m_inner + r_inner, m_inner - r_inner};
}

double lhs_xz(const XState& x) {
  const auto& d = x.diagonal;
  // sigma_x dephasing leaves two copies of one 2x2 block with eigenvalues
  // (1 +- kappa)/4.
  const double kappa = std::hypot(d[0] + d[2] - d[1] - d[3], 2.0 * (x.outer + x.inner));
  const double h_x = hbin((1.0 + kappa) / 2.0) + 1.0;
  const double h_z = diagonal_entropy(x);
  return h_x + h_z - 2.0 * entropy_b(x);
}

double bound_xz(const XState& x) {
  const auto spectrum = eigenvalues(x);
  double s_ab = 0.0;
  for (double v : spectrum) s_ab -= xlog2x(v);
  return s_ab - entropy_b(x) + 1.0;
}

double mixedness(const XState& x) {
  double purity = 2.0 * (x.outer * x.outer + x.inner * x.inner);
  for (double d : x.diagonal) purity += d * d;
  return 4.0 / 3.0 * (1.0 - purity);
}

double u_dp(const BellParams& bell, double p, double a) { return lhs_xz(depolarized(bell, p, a)); }
double ub_dp(const BellParams& bell, double p, double a) { return bound_xz(depolarized(bell, p, a)); }
double u_pd(const BellParams& bell, double q, double a) { return lhs_xz(dephased(bell, q, a)); }
double ub_pd(const BellParams& bell, double q, double a) { return bound_xz(dephased(bell, q, a)); }

double u_qwm_dp(const BellParams& bell, double p, double a, double gamma) {
  return lhs_xz(weak_measured(depolarized(bell, p, a), gamma).state);
}
double ub_qwm_dp(const BellParams& bell, double p, double a, double gamma) {
  return bound_xz(weak_measured(depolarized(bell, p, a), gamma).state);
}
double u_qwm_pd(const BellParams& bell, double q, double a, double gamma) {
  return lhs_xz(weak_measured(dephased(bell, q, a), gamma).state);
}
double ub_qwm_pd(const BellParams& bell, double q, double a, double gamma) {
  return bound_xz(weak_measured(dephased(bell, q, a), gamma).state);
}

}  // namespace eurh::closed_form
