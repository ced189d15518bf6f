#include "qre/surface_code.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <random>

namespace {

TEST(LogicalErrorRate, KnownValues) {
  EXPECT_NEAR(qre::logical_error_rate(1e-3, 3), 1e-3, 1e-15);
  for (int d : {3, 5, 9, 21})
    EXPECT_NEAR(qre::logical_error_rate(1e-2, d), 0.1, 1e-15);
  EXPECT_NEAR(qre::logical_error_rate(5e-4, 13), 7.8125e-11, 7.8125e-11 * 1e-12);
}

TEST(LogicalErrorRate, RejectsBadDistance) {
  try {
    qre::logical_error_rate(1e-3, 4);
    FAIL() << "expected invalid_distance";
  } catch (const qre::Error& e) {
    EXPECT_EQ(e.code(), qre::errc::invalid_distance);
  }
  EXPECT_THROW(qre::logical_error_rate(1e-3, 1), qre::Error);
  EXPECT_THROW(qre::logical_error_rate(1e-3, -3), qre::Error);
  EXPECT_THROW(qre::logical_error_rate(2e-2, 3), qre::Error);
}

TEST(LogicalErrorRate, StrictlyDecreasingInDistanceBelowThreshold) {
  for (double p : {5e-4, 3e-5, 9e-3}) {
    double prev = 1.0;
    for (int d = 3; d <= 41; d += 2) {
      const double rate = qre::logical_error_rate(p, d);
      EXPECT_LT(rate, prev);
      prev = rate;
    }
  }
}

TEST(DistillationError, CascadeValues) {
  EXPECT_NEAR(qre::distillation_error(1e-3, 1), 3.5e-8, 1e-21);
  const double eps1 = 3.5e-8;
  EXPECT_NEAR(qre::distillation_error(1e-3, 2), 35.0 * eps1 * eps1 * eps1,
              1e-33);
  EXPECT_THROW(qre::distillation_error(1e-3, 0), std::invalid_argument);
}

TEST(DistillationError, StrictlyDecreasingInLevels) {
  for (double p : {1e-3, 5e-4, 3e-5}) {
    double prev = 1.0;
    for (int l = 1; l <= 6; ++l) {
      const double eps = qre::distillation_error(p, l);
      if (eps == 0.0) break;  // cascade underflowed to exact zero
      EXPECT_LT(eps, prev);
      prev = eps;
    }
  }
}

qre::LogicalEstimate estimate_with(std::uint64_t t_gates, std::uint64_t qubits) {
  qre::LogicalEstimate est;
  est.total_t_gates = t_gates;
  est.logical_qubits = qubits;
  est.total_rotations = t_gates / 369 + 1;
  return est;
}

// Brute-force reimplementation of the sweep for cross-checking.
std::optional<qre::SurfaceCodeResult> sweep_oracle(const qre::LogicalEstimate& est,
                                                   const qre::HardwareProfile& hw,
                                                   double eps_sc) {
  const auto t = static_cast<double>(est.total_t_gates);
  int levels = 0;
  double distill = 0.0;
  for (int l = 1; l <= 100; ++l) {
    double eps = 35.0 * std::pow(hw.p_phys, 3);
    for (int i = 2; i <= l; ++i) eps = 35.0 * std::pow(eps, 3);
    if (t * eps < eps_sc / 2) {
      levels = l;
      distill = t * eps;
      break;
    }
  }
  if (levels == 0) return std::nullopt;
  std::optional<qre::SurfaceCodeResult> best;
  for (int d = 3; d <= 201; d += 2) {
    const double p_l = 0.1 * std::pow(100.0 * hw.p_phys, (d + 1) / 2);
    const double total = static_cast<double>(est.logical_qubits) * t * p_l + distill;
    if (!(total < eps_sc)) continue;
    qre::SurfaceCodeResult r;
    r.distance = d;
    r.physical_qubits = static_cast<std::uint64_t>(
        std::llround(2.0 * static_cast<double>(est.logical_qubits) * 2.0 * d * d));
    r.runtime = t * d * hw.cycle_time;
    r.spacetime = static_cast<double>(r.physical_qubits) * r.runtime;
    r.total_error = total;
    r.distillation_levels = levels;
    if (!best || r.spacetime < best->spacetime) best = r;
  }
  return best;
}

TEST(Optimize, MinimalWorkloadPicksDistanceThree) {
  qre::HardwareProfile hw{"custom", 1e-6, 1e-4};
  auto result = qre::optimize(estimate_with(1, 1), hw);
  EXPECT_EQ(result.distance, 3);
  EXPECT_EQ(result.distillation_levels, 1);
  EXPECT_EQ(result.physical_qubits, 2u * 1u * 2u * 9u);
  EXPECT_DOUBLE_EQ(result.runtime, 3e-6);
  EXPECT_DOUBLE_EQ(result.spacetime, result.physical_qubits * result.runtime);
  EXPECT_LT(result.total_error, 0.1);
}

TEST(Optimize, MatchesSweepOracleAcrossWorkloads) {
  std::mt19937 rng(20260822);
  std::uniform_real_distribution<double> log_t(2.0, 14.0);
  std::uniform_int_distribution<std::uint64_t> qubits(1, 400);
  std::uniform_real_distribution<double> log_p(-5.0, -2.01);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = static_cast<std::uint64_t>(std::pow(10.0, log_t(rng)));
    const auto est = estimate_with(t, qubits(rng));
    qre::HardwareProfile hw{"rand", 1e-6, std::pow(10.0, log_p(rng))};
    auto expected = sweep_oracle(est, hw, 0.1);
    if (!expected) {
      EXPECT_THROW(qre::optimize(est, hw), qre::Error);
      continue;
    }
    auto got = qre::optimize(est, hw);
    ASSERT_EQ(got.distance, expected->distance);
    ASSERT_EQ(got.physical_qubits, expected->physical_qubits);
    ASSERT_EQ(got.distillation_levels, expected->distillation_levels);
    ASSERT_NEAR(got.runtime, expected->runtime, expected->runtime * 1e-12);
    ASSERT_NEAR(got.total_error, expected->total_error,
                expected->total_error * 1e-12);
  }
}

TEST(Optimize, TotalErrorRecomputesFromFields) {
  qre::HardwareProfile hw{"sc", 1e-6, 5e-4};
  auto est = estimate_with(200000000, 24);
  auto r = qre::optimize(est, hw);
  const double recomputed =
      static_cast<double>(est.logical_qubits) * static_cast<double>(est.total_t_gates) *
          qre::logical_error_rate(hw.p_phys, r.distance) +
      static_cast<double>(est.total_t_gates) *
          qre::distillation_error(hw.p_phys, r.distillation_levels);
  EXPECT_NEAR(r.total_error, recomputed, recomputed * 1e-12);
  EXPECT_DOUBLE_EQ(r.spacetime, static_cast<double>(r.physical_qubits) * r.runtime);
}

TEST(Optimize, InfeasibleNearThreshold) {
  qre::HardwareProfile hw{"hot", 1e-6, 9.9e-3};
  try {
    qre::optimize(estimate_with(static_cast<std::uint64_t>(1e15), 100), hw);
    FAIL() << "expected no_feasible_distance";
  } catch (const qre::Error& e) {
    EXPECT_EQ(e.code(), qre::errc::no_feasible_distance);
  }
}

TEST(Optimize, DistanceNonIncreasingAsPhysicalErrorDrops) {
  auto est = estimate_with(500000000, 40);
  int prev = 1000;
  for (double p : {5e-3, 1e-3, 5e-4, 1e-4, 3e-5, 1e-5}) {
    qre::HardwareProfile hw{"x", 1e-6, p};
    auto r = qre::optimize(est, hw);
    EXPECT_LE(r.distance, prev);
    prev = r.distance;
  }
}

TEST(Optimize, TrappedIonVersusSuperconductingOrdering) {
  auto est = estimate_with(74000000, 17);
  auto sc = qre::optimize(est, *qre::builtin_profile("superconducting"));
  auto ti = qre::optimize(est, *qre::builtin_profile("trapped_ion"));
  EXPECT_LT(ti.distance, sc.distance);
  EXPECT_LT(ti.physical_qubits, sc.physical_qubits);
  EXPECT_GE(ti.runtime, 1e3 * sc.runtime);
  EXPECT_GT(ti.spacetime, sc.spacetime);
}

TEST(Optimize, BudgetAndLayoutKnobs) {
  auto est = estimate_with(1000000, 10);
  qre::HardwareProfile hw{"sc", 1e-6, 5e-4};
  qre::SurfaceCodeOptions tight;
  tight.eps_sc = 1e-6;
  auto loose_r = qre::optimize(est, hw);
  auto tight_r = qre::optimize(est, hw, tight);
  EXPECT_GT(tight_r.distance, loose_r.distance);
  EXPECT_LT(tight_r.total_error, 1e-6);

  qre::SurfaceCodeOptions roomy;
  roomy.route_factor = 3.0;
  roomy.patch_factor = 4.0;
  auto roomy_r = qre::optimize(est, hw, roomy);
  EXPECT_EQ(roomy_r.distance, loose_r.distance);
  const double scale = (3.0 * 4.0) / (2.0 * 2.0);
  EXPECT_EQ(roomy_r.physical_qubits,
            static_cast<std::uint64_t>(std::llround(loose_r.physical_qubits * scale)));
}

}  // namespace
