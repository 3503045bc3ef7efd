#pragma once

// Turns predicted photon numbers into detectable / not-detectable verdicts
// against a measured receiver floor averaged over repeated runs.

#include <array>
#include <cstdint>
#include <string_view>

#include "dcesim/constants.hpp"
#include "dcesim/estimator.hpp"

namespace dce::detection {

inline constexpr double kDefaultMinDetectableEnergy = 0.1 * constants::kElectronVolt;  // J
inline constexpr double kDefaultRepetitionInterval = 3.0;  // s
inline constexpr double kDefaultCampaignCap = 3600.0;      // s

struct DetectionChainSpec {
  double min_detectable_energy = kDefaultMinDetectableEnergy;  // J
  double signal_frequency = 0.0;                               // Hz
  std::int64_t runs = 1;
  double run_repetition_interval = kDefaultRepetitionInterval;  // s
  double campaign_cap = kDefaultCampaignCap;                    // s
  // Measured: plasma thermal radiation stayed under the receiver floor.
  bool plasma_noise_below_sensitivity = true;

  bool operator==(const DetectionChainSpec&) const = default;
};

void validate(const DetectionChainSpec& spec);

/// Photons per run at the receiver floor: E_min / (h f).
double single_run_floor(const DetectionChainSpec& spec);

/// Floor after averaging `runs` repetitions: single-run floor / sqrt(runs).
double sensitivity_photons(const DetectionChainSpec& spec);

enum class Formula { kSingleMirror, kCavityLinear, kCavityExponential };
std::string_view formula_tag(Formula f);  // "eq1" | "eq2" | "eq3"

struct FormulaVerdict {
  Formula formula = Formula::kSingleMirror;
  double predicted_photons = 0.0;
  double margin = 0.0;  // predicted / sensitivity
  bool detectable = false;
  bool marginal = false;  // predicted sits on the floor
};

struct FeasibilityVerdict {
  double sensitivity_photons = 0.0;
  std::array<FormulaVerdict, 3> per_formula{};
  /// The linear cavity formula is the conservative reference.
  static constexpr Formula kPessimistic = Formula::kCavityLinear;

  const FormulaVerdict& pessimistic() const { return per_formula[1]; }
};

FeasibilityVerdict verdict(const estimator::PhotonYield& yield, const DetectionChainSpec& spec);

struct CampaignDuration {
  double duration = 0.0;  // s
  bool exceeds_cap = false;
};

CampaignDuration campaign_duration(const DetectionChainSpec& spec);

}  // namespace dce::detection
