#include "eurh/scenario.hpp"

#include <cmath>

#include "eurh/channels.hpp"
#include "eurh/correlations.hpp"
#include "eurh/errors.hpp"
#include "eurh/published.hpp"
#include "eurh/uncertainty.hpp"

namespace eurh {

namespace {

KrausChannel noise_channel(const PointConfig& config) {
  switch (config.noise) {
    case NoiseKind::Depolarizing: return depolarizing_channel(config.strength);
    case NoiseKind::PhaseDamping: return phase_damping_channel(config.strength);
  }
  throw ConfigError("unknown noise kind");
}

void fill_published(const PointConfig& c, double a, UncertaintyReport& r) {
  const bool dp = c.noise == NoiseKind::Depolarizing;
  if (c.gamma) {
    r.lhs_published = dp ? published::u_qwm_dp(c.bell, c.strength, a, *c.gamma)
                         : published::u_qwm_pd(c.bell, c.strength, a, *c.gamma);
  } else {
    r.lhs_published = dp ? published::u_dp(c.bell, c.strength, a) : published::u_pd(c.bell, c.strength, a);
    r.bound_published = dp ? published::ub_dp(c.bell, c.strength, a) : published::ub_pd(c.bell, c.strength, a);
  }
  const auto off = [](const std::optional<double>& printed, double reference) {
    return printed && !(std::abs(*printed - reference) <= kPublishedTolerance);
  };
  r.published_mismatch = off(r.lhs_published, r.lhs_numeric) || off(r.bound_published, r.bound_numeric);
}

}  // namespace

const char* to_string(NoiseKind kind) {
  return kind == NoiseKind::Depolarizing ? "dp" : "pd";
}

NoiseKind parse_noise_kind(const std::string& text) {
  if (text == "dp" || text == "depolarizing") return NoiseKind::Depolarizing;
  if (text == "pd" || text == "phase_damping") return NoiseKind::PhaseDamping;
  throw ConfigError("unknown noise kind '" + text + "' (expected dp or pd)");
}

PipelineState build_state(const PointConfig& config) {
  const HawkingMode mode = HawkingMode::at(config.omega, config.temperature);
  const DensityMatrix initial = bell_diagonal(config.bell);
  const DensityMatrix noisy = apply_on_a(initial, noise_channel(config)).state;
  DensityMatrix rho = trace_region_ii(embed_hawking(noisy, mode));
  if (!config.gamma) return {std::move(rho), mode, 1.0};
  auto measured = apply_on_a(rho, weak_measurement(*config.gamma));
  return {std::move(measured.state), mode, measured.success_probability};
}

closed_form::PostSelected analytic_state(const PointConfig& config) {
  config.bell.validate();
  const double a = hawking_coeffs(config.omega, config.temperature).first;
  const closed_form::XState base = config.noise == NoiseKind::Depolarizing
                                       ? closed_form::depolarized(config.bell, config.strength, a)
                                       : closed_form::dephased(config.bell, config.strength, a);
  if (!config.gamma) return {base, 1.0};
  return closed_form::weak_measured(base, *config.gamma);
}

UncertaintyReport evaluate(const PointConfig& config) {
  const PipelineState numeric = build_state(config);
  const closed_form::PostSelected analytic = analytic_state(config);
  const ObservablePair pair = ObservablePair::pauli_xz();

  UncertaintyReport r;
  r.a = numeric.mode.a;
  r.b = numeric.mode.b;
  r.lhs_numeric = eur_lhs_numeric(numeric.rho, pair);
  r.bound_numeric = eur_bound_numeric(numeric.rho, pair);
  r.lhs_analytic = closed_form::lhs_xz(analytic.state);
  r.bound_analytic = closed_form::bound_xz(analytic.state);
  r.conditional_entropy = conditional_entropy(numeric.rho);
  r.discord = discord_xstate_closed_form(numeric.rho).discord;
  r.mixedness = mixedness(numeric.rho).mixedness;
  r.success_probability = numeric.success_probability;

  if (std::abs(r.lhs_numeric - r.lhs_analytic) > kDualPathTolerance ||
      std::abs(r.bound_numeric - r.bound_analytic) > kDualPathTolerance)
    throw ContractViolation("analytic and numeric paths disagree at T=" + std::to_string(config.temperature) +
                            ", strength=" + std::to_string(config.strength));
  if (r.lhs_numeric < r.bound_numeric - kDualPathTolerance)
    throw ContractViolation("uncertainty relation violated");

  fill_published(config, r.a, r);
  return r;
}

}  // namespace eurh
