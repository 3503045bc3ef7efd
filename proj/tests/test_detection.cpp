#include <gtest/gtest.h>

#include <cmath>

#include "dcesim/detection.hpp"
#include "dcesim/errors.hpp"

using namespace dce::detection;
using dce::DomainError;

namespace {

DetectionChainSpec receiver(std::int64_t runs) {
  DetectionChainSpec s;
  s.signal_frequency = 2.5e9;
  s.runs = runs;
  return s;
}

dce::estimator::PhotonYield yields(double n1, double n2, double n3) {
  dce::estimator::PhotonYield y;
  y.n_single_mirror = n1;
  y.n_cavity_linear = n2;
  y.n_cavity_exponential = n3;
  return y;
}

}  // namespace

TEST(Sensitivity, SingleRunFloor) {
  // 0.1 eV / (h * 2.5 GHz), 30-digit reference
  EXPECT_NEAR(sensitivity_photons(receiver(1)), 9671.95696833967264895, 1e-8);
  EXPECT_NEAR(sensitivity_photons(receiver(1)), 1e4, 0.05 * 1e4);
}

TEST(Sensitivity, HundredRuns) {
  EXPECT_NEAR(sensitivity_photons(receiver(100)), 967.195696833967264895, 1e-9);
}

TEST(Sensitivity, SquareRootAveraging) {
  EXPECT_EQ(sensitivity_photons(receiver(4)), 0.5 * sensitivity_photons(receiver(1)));
  for (std::int64_t r : {1, 3, 7, 50}) {
    for (std::int64_t k : {2, 3, 10}) {
      const double expected = sensitivity_photons(receiver(r)) / static_cast<double>(k);
      EXPECT_NEAR(sensitivity_photons(receiver(k * k * r)), expected, 1e-13 * expected);
    }
  }
}

TEST(Sensitivity, RejectsInvalidSpecs) {
  EXPECT_THROW(sensitivity_photons(receiver(0)), DomainError);
  DetectionChainSpec s = receiver(1);
  s.signal_frequency = 0.0;
  EXPECT_THROW(sensitivity_photons(s), DomainError);
}

TEST(Verdict, ReferenceNumberClearsSingleRunFloor) {
  const FeasibilityVerdict v = verdict(yields(0.015, 4.5e4, 2.1e40), receiver(1));
  EXPECT_TRUE(v.pessimistic().detectable);
  EXPECT_NEAR(v.pessimistic().margin, 4.5e4 / 9671.95696833967264895, 1e-9);
  EXPECT_NEAR(v.pessimistic().margin, 4.5, 0.1 * 4.5);
  EXPECT_FALSE(v.per_formula[0].detectable);
  EXPECT_EQ(FeasibilityVerdict::kPessimistic, Formula::kCavityLinear);
}

TEST(Verdict, ZeroYieldIsNotDetectable) {
  const FeasibilityVerdict v = verdict(yields(0.0, 0.0, 0.0), receiver(1));
  for (const auto& f : v.per_formula) {
    EXPECT_FALSE(f.detectable);
    EXPECT_EQ(f.margin, 0.0);
  }
}

TEST(Verdict, YieldOnTheFloorIsMarginal) {
  const double floor = sensitivity_photons(receiver(1));
  const FeasibilityVerdict v = verdict(yields(floor, floor, floor), receiver(1));
  EXPECT_TRUE(v.pessimistic().detectable);
  EXPECT_TRUE(v.pessimistic().marginal);
  EXPECT_DOUBLE_EQ(v.pessimistic().margin, 1.0);
}

TEST(Verdict, SaturatedExponentialIsDetectable) {
  const FeasibilityVerdict v =
      verdict(yields(1.0, 1.0, std::numeric_limits<double>::infinity()), receiver(1));
  EXPECT_TRUE(v.per_formula[2].detectable);
}

TEST(Verdict, MonotoneInYield) {
  const double floor = sensitivity_photons(receiver(100));
  for (double scale = 0.01; scale < 100.0; scale *= 1.3) {
    const double n = scale * floor;
    const bool before = verdict(yields(n, n, n), receiver(100)).pessimistic().detectable;
    const bool after = verdict(yields(n, 1.5 * n, n), receiver(100)).pessimistic().detectable;
    if (before) EXPECT_TRUE(after);
  }
}

TEST(Campaign, DurationAndCap) {
  DetectionChainSpec s = receiver(100);
  EXPECT_EQ(campaign_duration(s).duration, 300.0);
  EXPECT_FALSE(campaign_duration(s).exceeds_cap);
  s.runs = 1;
  EXPECT_EQ(campaign_duration(s).duration, s.run_repetition_interval);
  s.runs = 10000;
  EXPECT_EQ(campaign_duration(s).duration, 3e4);
  EXPECT_TRUE(campaign_duration(s).exceeds_cap);
}

TEST(Formula, Tags) {
  EXPECT_EQ(formula_tag(Formula::kSingleMirror), "eq1");
  EXPECT_EQ(formula_tag(Formula::kCavityLinear), "eq2");
  EXPECT_EQ(formula_tag(Formula::kCavityExponential), "eq3");
}
