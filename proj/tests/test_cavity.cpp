#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dcesim/cavity.hpp"
#include "dcesim/constants.hpp"
#include "dcesim/errors.hpp"

using namespace dce::cavity;
using dce::DomainError;

namespace {

const CavityGeometry kNiobium{0.071, 0.022, 0.110, 2e6};
const ModeIndex kTE101{ModeFamily::kTE, 1, 0, 1};

}  // namespace

// Reference values below were evaluated independently at 30 significant
// digits (mpmath) from the closed forms, with CODATA 2018 constants.

TEST(Eigenfrequency, NiobiumTE101) {
  const double f = eigenfrequency(kNiobium, kTE101);
  EXPECT_NEAR(f, 2512799001.66081693619, 1e-3);
  EXPECT_NEAR(f, 2.5e9, 0.01 * 2.5e9);
}

TEST(Eigenfrequency, CubeIsSymmetricUnderAxisExchange) {
  const CavityGeometry cube{0.05, 0.05, 0.05, 1e4};
  EXPECT_DOUBLE_EQ(eigenfrequency(cube, {ModeFamily::kTE, 1, 0, 1}),
                   eigenfrequency(cube, {ModeFamily::kTE, 0, 1, 1}));
}

TEST(Eigenfrequency, LabelExchangeOfTransverseAxes) {
  const CavityGeometry swapped{kNiobium.height_b, kNiobium.width_a, kNiobium.length_d, 2e6};
  EXPECT_DOUBLE_EQ(eigenfrequency(kNiobium, {ModeFamily::kTE, 1, 0, 1}),
                   eigenfrequency(swapped, {ModeFamily::kTE, 0, 1, 1}));
  EXPECT_DOUBLE_EQ(eigenfrequency(kNiobium, {ModeFamily::kTM, 1, 2, 1}),
                   eigenfrequency(swapped, {ModeFamily::kTM, 2, 1, 1}));
}

TEST(Eigenfrequency, DoublingDimensionsHalvesFrequency) {
  const CavityGeometry doubled{2 * kNiobium.width_a, 2 * kNiobium.height_b, 2 * kNiobium.length_d, 2e6};
  EXPECT_EQ(eigenfrequency(doubled, kTE101), 0.5 * eigenfrequency(kNiobium, kTE101));
}

TEST(Eigenfrequency, ScalingLawHoldsForRandomGeometries) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dim(0.005, 0.5);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  std::uniform_int_distribution<int> idx(0, 3);
  for (int i = 0; i < 1000; ++i) {
    const CavityGeometry g{dim(rng), dim(rng), dim(rng), 1e3};
    ModeIndex mode{ModeFamily::kTE, idx(rng), idx(rng), idx(rng)};
    if ((mode.m == 0 && mode.n == 0) || (mode.m != 0) + (mode.n != 0) + (mode.p != 0) < 2) continue;
    const double s = scale(rng);
    const CavityGeometry scaled{g.width_a * s, g.height_b * s, g.length_d * s, 1e3};
    const double expected = eigenfrequency(g, mode) / s;
    EXPECT_NEAR(eigenfrequency(scaled, mode), expected, 1e-12 * expected);
  }
}

TEST(Eigenfrequency, DecreasesInEachDimension) {
  const ModeIndex tm111{ModeFamily::kTM, 1, 1, 1};
  const double base = eigenfrequency(kNiobium, tm111);
  CavityGeometry g = kNiobium;
  g.width_a *= 1.01;
  EXPECT_LT(eigenfrequency(g, tm111), base);
  g = kNiobium;
  g.height_b *= 1.01;
  EXPECT_LT(eigenfrequency(g, tm111), base);
  g = kNiobium;
  g.length_d *= 1.01;
  EXPECT_LT(eigenfrequency(g, tm111), base);
}

TEST(ModeIndexValidation, NamesTheViolatedRule) {
  try {
    validate(ModeIndex{ModeFamily::kTE, 0, 0, 1});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("TE modes require"), std::string::npos);
  }
  try {
    validate(ModeIndex{ModeFamily::kTM, 1, 0, 1});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("TM modes require"), std::string::npos);
  }
  EXPECT_THROW(validate(ModeIndex{ModeFamily::kTE, 1, 0, 0}), DomainError);
  EXPECT_THROW(validate(ModeIndex{ModeFamily::kTE, -1, 1, 1}), DomainError);
  EXPECT_NO_THROW(validate(ModeIndex{ModeFamily::kTM, 1, 1, 0}));
}

TEST(ModeIndexValidation, ParseRoundTrip) {
  EXPECT_EQ(parse_mode("TE101"), kTE101);
  EXPECT_EQ(to_string(parse_mode("TM110")), "TM110");
  EXPECT_THROW(parse_mode("TE001"), DomainError);
  EXPECT_THROW(parse_mode("XY101"), DomainError);
}

TEST(Eigenfrequency, RejectsNonPositiveGeometry) {
  EXPECT_THROW(eigenfrequency({0.0, 0.022, 0.11, 1.0}, kTE101), DomainError);
  EXPECT_THROW(eigenfrequency({0.071, 0.022, 0.11, 0.0}, kTE101), DomainError);
}

TEST(SkinDepth, CopperAt2p5GHz) {
  EXPECT_NEAR(skin_depth(5.8e7, 2.5e9), 1.32170986165635915e-6, 1e-18);
}

TEST(SkinDepth, InverseSquareRootOfFrequency) {
  EXPECT_NEAR(skin_depth(1e4, 1e9) / skin_depth(1e4, 4e9), 2.0, 1e-15);
  for (double f : {1e6, 3.7e8, 2.5e9, 1e11}) {
    EXPECT_NEAR(skin_depth(1e4, f) * std::sqrt(f), skin_depth(1e4, 1e9) * std::sqrt(1e9),
                1e-12 * skin_depth(1e4, 1e9) * std::sqrt(1e9));
  }
}

TEST(SkinDepth, ShrinksMonotonicallyToZeroWithConductivity) {
  double previous = skin_depth(1.0, 2.5e9);
  for (double sigma = 10.0; sigma < 1e300; sigma *= 1e10) {
    const double d = skin_depth(sigma, 2.5e9);
    EXPECT_LT(d, previous);
    previous = d;
  }
  EXPECT_EQ(skin_depth(std::numeric_limits<double>::infinity(), 2.5e9), 0.0);
}

TEST(SkinDepth, RejectsNonPositiveInputs) {
  EXPECT_THROW(skin_depth(0.0, 1e9), DomainError);
  EXPECT_THROW(skin_depth(1e4, -1.0), DomainError);
}

TEST(ThermalOccupation, NiobiumCavityAt4p6K) {
  EXPECT_NEAR(thermal_occupation(2.5e9, 4.6), 37.8415527325104403877, 1e-10);
}

TEST(ThermalOccupation, UnitOccupationAtLn2) {
  using namespace dce::constants;
  const double f = 1e10;
  const double t = kPlanck * f / (kBoltzmann * std::log(2.0));
  EXPECT_NEAR(thermal_occupation(f, t), 1.0, 1e-14);
}

TEST(ThermalOccupation, ColdLimitAndMonotoneInTemperature) {
  EXPECT_EQ(thermal_occupation(2.5e9, 1e-6), 0.0);
  double previous = 0.0;
  for (double t = 0.01; t < 1000.0; t *= 1.5) {
    const double n = thermal_occupation(2.5e9, t);
    EXPECT_GE(n, previous);
    previous = n;
  }
}

TEST(ThermalOccupation, MatchesHighTemperatureExpansion) {
  using namespace dce::constants;
  for (double x : {0.001, 0.01, 0.03, 0.049}) {
    const double f = 2.5e9;
    const double t = kPlanck * f / (kBoltzmann * x);
    const double approx = 1.0 / x - 0.5;
    EXPECT_NEAR(thermal_occupation(f, t), approx, 0.01 * approx);
  }
}

TEST(ThermalOccupation, RejectsNonPositiveInputs) {
  EXPECT_THROW(thermal_occupation(0.0, 4.6), DomainError);
  EXPECT_THROW(thermal_occupation(2.5e9, 0.0), DomainError);
}
