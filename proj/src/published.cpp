#include "eurh/published.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace eurh::published {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSlack = 1e-12;

double xlx(double v) {
  if (v < -kSlack) return kNaN;
  return v > 0.0 ? v * std::log2(v) : 0.0;
}

double hb(double x) {
  if (!(x >= -kSlack && x <= 1.0 + kSlack)) return kNaN;
  return -xlx(x) - xlx(1.0 - x);
}

double sum_xlx(const std::array<double, 4>& v) {
  double s = 0.0;
  for (double x : v) s += xlx(x);
  return s;
}

ComplexMatrix x_matrix(const std::array<double, 4>& d, double outer, double inner) {
  ComplexMatrix m = ComplexMatrix::diagonal(d);
  m(0, 3) = m(3, 0) = outer;
  m(1, 2) = m(2, 1) = inner;
  return m;
}

std::array<double, 4> dp_diagonal(const BellParams& bell, double p, double a) {
  const double a2 = a * a;
  const double c3 = bell.c3;
  return {(2 * p - a2 * (1 + c3) * (-3 + 2 * p)) / 12, (6 - 2 * p + a2 * (1 + c3) * (-3 + 2 * p)) / 12,
          (2 * p + a2 * (-1 + c3) * (-3 + 2 * p)) / 12, (6 - 2 * p - a2 * (-1 + c3) * (-3 + 2 * p)) / 12};
}

std::array<double, 4> pd_diagonal(const BellParams& bell, double a) {
  const double a2 = a * a;
  const double c3 = bell.c3;
  return {a2 * (1 + c3) / 4, (2 - a2 * (1 + c3)) / 4, a2 * (1 - c3) / 4, (2 + a2 * (-1 + c3)) / 4};
}

std::array<double, 4> qwm_dp_diagonal(const BellParams& bell, double p, double a, double g) {
  const double a2 = a * a;
  const double c3 = bell.c3;
  const double n = 1.0 / (6 * (g - 2));
  return {n * (-2 * p + a2 * (1 + c3) * (-3 + 2 * p)), -n * (6 - 2 * p + a2 * (1 + c3) * (-3 + 2 * p)),
          n * ((g - 1) * (2 * p + a2 * (-1 + c3) * (-3 + 2 * p))),
          n * ((1 - g) * (2 * (-3 + p) + a2 * (-1 + c3) * (-3 + 2 * p)))};
}

}  // namespace

ComplexMatrix traced_state_dp(const BellParams& bell, double p, double a) {
  const auto [c1, c2, c3] = bell;
  return x_matrix(dp_diagonal(bell, p, a), a * (c1 * (3 - 2 * p) + c2 * (-3 + 4 * p)) / 12,
                  a * (c1 + c2) / 4 - a * (c1 + 2 * c2) * p / 6);
}

ComplexMatrix traced_state_pd(const BellParams& bell, double q, double a) {
  const double s = std::sqrt(1 - q);
  return x_matrix(pd_diagonal(bell, a), a * (bell.c1 - bell.c2) * s / 4, a * (bell.c1 + bell.c2) * s / 4);
}

ComplexMatrix weak_measured_state_dp(const BellParams& bell, double p, double a, double gamma) {
  const auto [c1, c2, c3] = bell;
  const double n = 1.0 / (6 * (gamma - 2));
  const double root = a * std::sqrt(1 - gamma);
  return x_matrix(qwm_dp_diagonal(bell, p, a, gamma), n * root * (c2 * (3 - 4 * p) + c1 * (-3 + 2 * p)),
                  n * root * (-3 * (c1 + c2) + 2 * (c1 + 2 * c2) * p));
}

double u_dp(const BellParams& bell, double p, double a) {
  const double a2 = a * a;
  const double lambda = std::sqrt((1 + a2 * a2 + a2 * (-2 + bell.c1 * bell.c1)) * (3 - 2 * p) * (3 - 2 * p));
  return hb((3 + lambda) / 6) - sum_xlx(dp_diagonal(bell, p, a)) - 2 * hb((a2 * (3 - 2 * p) + 2 * p) / 6) + 1;
}

double ub_dp(const BellParams& bell, double p, double a) {
  const auto [c1, c2, c3] = bell;
  const double a2 = a * a;
  const double a4 = a2 * a2;
  const double r = (3 - 2 * p) * (3 - 2 * p);
  const double eps = 3 + a2 * c3 * (3 - 2 * p);
  const double tau = std::sqrt(r + a4 * r +
                               a2 * (9 * (-2 + (c1 - c2) * (c1 - c2)) -
                                     12 * (-2 + c1 * c1 - 3 * c1 * c2 + 2 * c2 * c2) * p +
                                     4 * (-2 + (c1 - 2 * c2) * (c1 - 2 * c2)) * p * p));
  const double j = 3 - a2 * c3 * (3 - 2 * p);
  const double ell = std::sqrt(r + a4 * r +
                               a2 * (9 * (-2 + (c1 + c2) * (c1 + c2)) - 12 * (-2 + (c1 + c2) * (c1 + 2 * c2)) * p +
                                     4 * (-2 + (c1 + 2 * c2) * (c1 + 2 * c2)) * p * p));
  const std::array<double, 4> ev{(eps + tau) / 12, (eps - tau) / 12, (j + ell) / 12, (j - ell) / 12};
  return 1 - sum_xlx(ev) - hb((a2 * (3 - 2 * p) + 2 * p) / 6);
}

double u_pd(const BellParams& bell, double q, double a) {
  const double a2 = a * a;
  const double kappa = std::sqrt(1 + a2 * a2 - a2 * (2 + bell.c1 * bell.c1 * (q - 1)));
  return hb((1 + kappa) / 2) - sum_xlx(pd_diagonal(bell, a)) - 2 * hb(a2 / 2) + 1;
}

double ub_pd(const BellParams& bell, double q, double a) {
  const auto [c1, c2, c3] = bell;
  const double a2 = a * a;
  const double x = 1 - a2 * c3;
  const double y = std::sqrt(1 + a2 * a2 + a2 * (-2 - (c1 + c2) * (c1 + c2) * (-1 + q)));
  const double s = 1 + a2 * c3;
  const double u = std::sqrt(1 + a2 * a2 + a2 * (-2 - (c1 - c2) * (c1 - c2) * (-1 + q)));
  const std::array<double, 4> ev{(x + y) / 16, (x - y) / 16, (s + u) / 16, (s - u) / 16};
  return -sum_xlx(ev) - hb(a2 / 2) + 1;
}

double u_qwm_dp(const BellParams& bell, double p, double a, double gamma) {
  const auto [c1, c2, c3] = bell;
  const double g = gamma;
  const double a2 = a * a;
  const double lt = std::sqrt(((-2 + g) * (-2 + g) + a2 * a2 * (2 + (-1 + c3) * g) * (2 + (-1 + c3) * g) -
                               2 * a2 * (2 * c1 * c1 * (-1 + g) - (-2 + g) * (2 + (-1 + c3) * g))) *
                              (3 - 2 * p) * (3 - 2 * p)) /
                    (12 * (-2 + g));
  const double delta = (2 * (-2 + g) * p + a2 * (2 + (-1 + c3) * g) * (-3 + 2 * p)) / (6 * (g - 2));
  return hb((1 + 4 * lt) / 2) - sum_xlx(qwm_dp_diagonal(bell, p, a, g)) + 2 * hb(delta) + 1;
}

double u_qwm_pd(const BellParams& bell, double q, double a, double gamma) {
  const auto [c1, c2, c3] = bell;
  const double g = gamma;
  const double a2 = a * a;
  const double kt = std::sqrt((g - 2) * (g - 2) + a2 * a2 * (2 + (c3 - 1) * g) * (2 + (c3 - 1) * g) +
                              2 * a2 * (2 * c1 * c1 * (q - 1) * (g - 1) + (g - 2) * (2 + (c3 - 1) * g))) /
                    (g - 2);
  const std::array<double, 4> k{a2 * (1 + c3) / (2 * (2 - g)), (2 - a2 * (1 + c3)) / (2 * (2 - g)),
                                a2 * (c3 - 1) * (g - 1) / (2 * (2 - g)), (2 + a2 * (-1 + c3)) * (1 - g) / (2 * (2 - g))};
  return hb((1 + kt) / 2) - sum_xlx(k) - 2 * hb(a2 * (g - 2 - c3 * g) / (2 * (g - 2))) + 1;
}

double mixedness_qwm_dp(const BellParams& bell, double p, double a, double gamma) {
  const double c3 = bell.c3;
  const double g = gamma;
  const double a2 = a * a;
  const auto sq = [](double v) { return v * v; };
  const double num = sq(g - 1) * sq(a2 * (c3 - 1) * (2 * p - 3) + 2 * (p - 3)) +
                     sq(g - 1) * sq(a2 * (c3 - 1) * (2 * p - 3) + 2 * p) + sq(a2 * (c3 + 1) * (2 * p - 3) - 2 * p) +
                     sq(a2 * (c3 + 1) * (2 * p - 3) - 2 * p + 6);
  return 4.0 / 3.0 * (1 - num / (36 * sq(g - 2)));
}

}  // namespace eurh::published
