#pragma once

// Experiment configuration: a JSON document in which every physical quantity
// is a string with an explicit unit ("71 mm", "0.1 eV", "1 uJ/cm2").
//
// Fields that follow from others (mirror frequency, drive frequency, stroke,
// duration, ...) may be omitted and are then derived. When present they are
// checked against the derived value; a mismatch beyond kLinkTolerance is
// rejected unless the field is listed in "overrides".

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcesim/cavity.hpp"
#include "dcesim/detection.hpp"
#include "dcesim/estimator.hpp"
#include "dcesim/plasma_mirror.hpp"
#include "dcesim/units.hpp"

namespace dce::config {

/// Relative deviation accepted between an explicit and a derived value.
inline constexpr double kLinkTolerance = 0.01;

struct Metadata {
  std::string name;
  std::string notes;
  bool operator==(const Metadata&) const = default;
};

struct CavitySection {
  cavity::CavityGeometry geometry;
  cavity::ModeIndex mode;
  double temperature = 4.6;  // K
  bool operator==(const CavitySection&) const = default;
};

struct MirrorMotionSection {
  std::optional<double> frequency;       // Hz, omega / 2pi
  std::optional<double> duration;        // s
  std::optional<double> stroke;          // m
  std::optional<double> cavity_length;   // m
  std::optional<double> velocity_ratio;
  std::optional<double> quality_factor;
  bool operator==(const MirrorMotionSection&) const = default;
};

struct PlasmaSection {
  double wafer_thickness = 0.0;
  double recombination_time = 0.0;
  double laser_rise_time = 0.0;
  double areal_pulse_energy = 0.0;
  std::optional<double> illuminated_area;     // default: a * b end wall
  std::optional<double> microwave_frequency;  // default: cavity eigenfrequency
  double plasma_conductivity = 0.0;
  double duty_fraction = plasma::kDefaultDutyFraction;
  bool operator==(const PlasmaSection&) const = default;
};

struct PulseTrainSection {
  std::optional<double> modulation_frequency;  // default: 2 x eigenfrequency
  double detuning = 0.0;  // relative; drive = base * (1 + detuning)
  std::int64_t pulse_count = 0;
  plasma::PulseBudgetBounds bounds;
  bool operator==(const PulseTrainSection&) const = default;
};

struct DetectionSection {
  double min_detectable_energy = detection::kDefaultMinDetectableEnergy;
  std::optional<double> signal_frequency;  // default: cavity eigenfrequency
  std::int64_t runs = 1;
  double run_repetition_interval = detection::kDefaultRepetitionInterval;
  double campaign_cap = detection::kDefaultCampaignCap;
  bool plasma_noise_below_sensitivity = true;
  bool operator==(const DetectionSection&) const = default;
};

/// Mechanically vibrating wall used as the comparison case in reports.
struct ReferenceWallSection {
  double mass_density = 3e3;  // kg/m^3
  double volume = 9e-8;       // m^3
  double frequency = 2e9;     // Hz
  double amplitude = 1e-9;    // m
  bool operator==(const ReferenceWallSection&) const = default;
};

struct AcousticSection {
  double frequency = 1e9;     // Hz
  double qf_product = 1e14;   // Hz
  bool operator==(const AcousticSection&) const = default;
};

struct ExperimentConfig {
  Metadata metadata;
  CavitySection cavity;
  MirrorMotionSection mirror_motion;
  PlasmaSection plasma;
  PulseTrainSection pulse_train;
  DetectionSection detection;
  ReferenceWallSection reference_wall;
  AcousticSection acoustic;
  std::vector<std::string> overrides;  // sorted, unique dotted paths

  bool is_overridden(std::string_view path) const;
  bool operator==(const ExperimentConfig&) const = default;
};

enum class LinkStatus { kDerived, kSatisfied, kOverridden };
std::string_view to_string(LinkStatus status);

struct LinkCheck {
  std::string field;  // dotted path of the checked field
  std::string rule;   // human-readable relation
  LinkStatus status = LinkStatus::kDerived;
  double value = 0.0;     // value in use
  double expected = 0.0;  // value implied by the rule
};

/// Every quantity the modules need, with cross-links applied.
struct ResolvedExperiment {
  cavity::CavityGeometry geometry;
  cavity::ModeIndex mode;
  double temperature = 0.0;
  double eigenfrequency = 0.0;     // Hz
  double drive_frequency = 0.0;    // Hz, detuned laser modulation actually used
  estimator::MirrorMotionSpec mirror;
  plasma::PlasmaMirrorSpec plasma;
  double duty_fraction = plasma::kDefaultDutyFraction;
  plasma::PulseTrainSpec pulse_train;
  plasma::PulseBudgetBounds pulse_bounds;
  double detuning = 0.0;
  detection::DetectionChainSpec detection;
  estimator::VibratingWallSpec reference_wall;
  AcousticSection acoustic;
  std::vector<LinkCheck> links;
};

/// Applies defaults and cross-links. Throws ConfigError naming the violated
/// link, DomainError for invalid physics inputs.
ResolvedExperiment resolve(const ExperimentConfig& config);

/// Parses, checks unknown keys and units, and resolves once to validate.
ExperimentConfig load_config(std::string_view document);
ExperimentConfig load_config_file(const std::string& path);

/// Canonical document (SI units, sorted keys). load_config(serialize(c)) == c.
std::string serialize(const ExperimentConfig& config);

/// Sets a dotted path to a textual value (units allowed) and records the path
/// as an override. Unknown paths throw ConfigError.
ExperimentConfig with_override(const ExperimentConfig& config, const std::string& path,
                               const std::string& value);

struct FieldInfo {
  enum class Kind { kQuantity, kInteger, kBoolean, kText, kMode };
  Kind kind = Kind::kQuantity;
  units::Dimension dimension = units::Dimension::kDimensionless;
  bool optional = false;
};

/// Every settable leaf path of the document schema.
const std::map<std::string, FieldInfo>& schema();

}  // namespace dce::config
