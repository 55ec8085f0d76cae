#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eurh/channels.hpp"
#include "eurh/errors.hpp"
#include "eurh/states.hpp"
#include "support.hpp"

using namespace eurh;

TEST(Hawking, CoefficientsAtUnitTemperature) {
  // a = 1/sqrt(1 + e^-1), b = 1/sqrt(1 + e)
  const auto [a, b] = hawking_coeffs(1.0, 1.0);
  EXPECT_NEAR(a, 0.8550196364002437, 1e-15);
  EXPECT_NEAR(b, 0.5185956241330958, 1e-15);
}

TEST(Hawking, Limits) {
  EXPECT_EQ(hawking_coeffs(1.0, 0.0), std::make_pair(1.0, 0.0));
  const auto [a, b] = hawking_coeffs(1.0, 1e9);
  EXPECT_NEAR(a * a, 0.5, 1e-9);
  EXPECT_NEAR(b * b, 0.5, 1e-9);
  const auto [a_cold, b_cold] = hawking_coeffs(1.0, 1e-4);  // exp(1e4) overflows
  EXPECT_EQ(a_cold, 1.0);
  EXPECT_EQ(b_cold, 0.0);
}

TEST(Hawking, RejectsBadArguments) {
  EXPECT_THROW(hawking_coeffs(0.0, 1.0), DomainError);
  EXPECT_THROW(hawking_coeffs(-1.0, 1.0), DomainError);
  EXPECT_THROW(hawking_coeffs(1.0, -0.1), DomainError);
  EXPECT_THROW(hawking_coeffs(1.0, std::nan("")), DomainError);
}

TEST(BellParams, MaximallyEntangledEntries) {
  const DensityMatrix rho = bell_diagonal({1, -1, 1});
  const double expected[4][4] = {{0.5, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0.5}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double e = (i == 0 && j == 3) || (i == 3 && j == 0) ? 0.5 : expected[i][j];
      EXPECT_NEAR(std::abs(rho(i, j) - e), 0.0, 1e-15) << i << "," << j;
    }
}

TEST(BellParams, MixedExampleEntries) {
  const DensityMatrix rho = bell_diagonal({0.9, 0.8, -0.9});
  EXPECT_NEAR(rho(0, 0).real(), 0.025, 1e-15);
  EXPECT_NEAR(rho(1, 1).real(), 0.475, 1e-15);
  EXPECT_NEAR(rho(2, 2).real(), 0.475, 1e-15);
  EXPECT_NEAR(rho(3, 3).real(), 0.025, 1e-15);
  EXPECT_NEAR(rho(0, 3).real(), 0.025, 1e-15);
  EXPECT_NEAR(rho(1, 2).real(), 0.425, 1e-15);
}

TEST(BellParams, PhysicalityAndScaling) {
  EXPECT_TRUE(BellParams({1, -1, 1}).physical());
  EXPECT_FALSE(BellParams({0.5, 0.5, 0.5}).physical());
  EXPECT_THROW(bell_diagonal({0.9, -0.8, 0.6}), DomainError);
  EXPECT_THROW(bell_diagonal({1.2, 0, 0}), DomainError);

  const BellParams scaled = BellParams{0.5, 0.5, 0.5}.scaled_into_tetrahedron();
  EXPECT_NEAR(scaled.c1, 1.0 / 3.0, 1e-15);
  EXPECT_TRUE(scaled.physical());
  const auto w = BellParams{0.9, -0.8, 0.6}.scaled_into_tetrahedron().bell_weights();
  EXPECT_NEAR(*std::min_element(w.begin(), w.end()), 0.0, 1e-15);
  EXPECT_EQ(BellParams({0.3, 0.2, 0.1}).scaled_into_tetrahedron(), BellParams({0.3, 0.2, 0.1}));
}

TEST(Embedding, PreservesTraceAndReducesToInputAtZeroTemperature) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = bell_diagonal(fixtures::random_bell(rng));
    const DensityMatrix cold = trace_region_ii(embed_hawking(rho, HawkingMode::at(1.0, 0.0)));
    EXPECT_LT(max_abs_diff(cold.matrix(), rho.matrix()), 1e-15);
    const DensityMatrix warm = embed_hawking(rho, HawkingMode::at(2.0, 3.0));
    EXPECT_NEAR(warm.trace(), 1.0, 1e-14);
    // Region II carries no information about A.
    constexpr std::array<std::size_t, 3> dims{2, 2, 2};
    constexpr std::array<std::size_t, 1> keep_a{0};
    EXPECT_LT(max_abs_diff(partial_trace(warm, dims, keep_a).matrix(), 0.5 * ComplexMatrix::identity(2)), 1e-14);
  }
}

TEST(Channels, CompletenessAndValidation) {
  for (double s : {0.0, 0.3, 1.0}) {
    EXPECT_NO_THROW(depolarizing_channel(s).check());
    EXPECT_NO_THROW(phase_damping_channel(s).check());
    EXPECT_NO_THROW(weak_measurement(s).check());
  }
  EXPECT_THROW(depolarizing_channel(1.1), DomainError);
  EXPECT_THROW(phase_damping_channel(-0.1), DomainError);
  EXPECT_THROW(weak_measurement(2.0), DomainError);
  EXPECT_FALSE(weak_measurement(0.5).trace_preserving);
}

TEST(Channels, DepolarizingContractsBellCorrelations) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const BellParams c = fixtures::random_bell(rng);
    const double p = std::uniform_real_distribution<double>(0, 1)(rng);
    const double f = 1.0 - 4.0 * p / 3.0;
    const auto out = apply_on_a(bell_diagonal(c), depolarizing_channel(p));
    EXPECT_LT(max_abs_diff(out.state.matrix(), bell_diagonal({f * c.c1, f * c.c2, f * c.c3}).matrix()), 1e-14);
    EXPECT_EQ(out.success_probability, 1.0);
  }
}

TEST(Channels, PhaseDampingOnQubit) {
  const ComplexMatrix plus(2, 2, {0.5, 0.5, 0.5, 0.5});
  const ComplexMatrix out = phase_damping_channel(0.36).apply(plus);
  EXPECT_NEAR(out(0, 1).real(), 0.5 * 0.8, 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
}

TEST(Channels, DecayExponent) {
  EXPECT_NEAR(NoiseParams::from_decay_exponent(std::log(2.0)).strength, 0.5, 1e-15);
  EXPECT_EQ(NoiseParams::from_decay_exponent(0.0).strength, 0.0);
  EXPECT_NEAR(NoiseParams::from_decay_exponent(1e-12).strength, 1e-12, 1e-24);
  EXPECT_THROW(NoiseParams::from_decay_exponent(-1.0), DomainError);
}

TEST(Channels, WeakMeasurementPostSelection) {
  const auto out = apply_on_a(bell_diagonal({1, -1, 1}), weak_measurement(0.5));
  EXPECT_NEAR(out.success_probability, 0.75, 1e-15);
  EXPECT_NEAR(out.state.trace(), 1.0, 1e-15);
  EXPECT_NEAR(out.state(0, 0).real(), 0.5 / 0.75, 1e-15);

  // All weight on |1>_A and gamma = 1: nothing survives.
  ComplexMatrix excited(4, 4);
  excited(2, 2) = excited(3, 3) = 0.5;
  EXPECT_THROW(apply_on_a(DensityMatrix(excited), weak_measurement(1.0)), DegeneratePostSelection);
}
