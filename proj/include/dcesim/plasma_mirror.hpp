#pragma once

// Laser-switched semiconductor mirror: can it switch fast enough, is the
// plasma layer opaque, and how much laser energy does a run take.

#include <cstdint>
#include <string_view>

namespace dce::plasma {

/// Fraction of a drive period available for the mirror to appear and vanish.
inline constexpr double kDefaultDutyFraction = 0.5;

struct PlasmaMirrorSpec {
  double wafer_thickness = 0.0;     // m, equals twice the mirror stroke
  double recombination_time = 0.0;  // s
  double laser_rise_time = 0.0;     // s
  double areal_pulse_energy = 0.0;  // J/m^2 per pulse
  double illuminated_area = 0.0;    // m^2
  double microwave_frequency = 0.0; // Hz
  double plasma_conductivity = 0.0; // S/m

  bool operator==(const PlasmaMirrorSpec&) const = default;
};

/// Switching times may be zero (ideal switch); everything else must be > 0.
void validate(const PlasmaMirrorSpec& spec);

struct PulseBudgetBounds {
  std::int64_t min_pulses = 1000;
  std::int64_t max_pulses = 10000;

  bool operator==(const PulseBudgetBounds&) const = default;
};

struct PulseTrainSpec {
  double modulation_frequency = 0.0;  // Hz, laser amplitude modulation
  std::int64_t pulse_count = 0;

  bool operator==(const PulseTrainSpec&) const = default;
};

void validate(const PulseTrainSpec& train, const PulseBudgetBounds& bounds = {});

enum class LimitingFactor { kLaserRise, kRecombination };
std::string_view to_string(LimitingFactor factor);

struct SwitchingResult {
  bool feasible = false;
  double margin = 0.0;  // allowed / needed; +inf for an ideal switch
  bool unbounded_margin = false;
  LimitingFactor limiting_factor = LimitingFactor::kRecombination;
  double needed_time = 0.0;   // s
  double allowed_time = 0.0;  // s
};

SwitchingResult switching_feasible(const PlasmaMirrorSpec& spec, double modulation_frequency,
                                   double duty_fraction = kDefaultDutyFraction);

struct OpacityResult {
  bool ok = false;
  double required_thickness = 0.0;  // m, three skin depths
  double skin_depth = 0.0;          // m
};

OpacityResult mirror_opacity_ok(const PlasmaMirrorSpec& spec);

struct LaserBudget {
  double per_pulse = 0.0;  // J
  double total = 0.0;      // J
  double duration = 0.0;   // s
};

LaserBudget laser_budget(const PlasmaMirrorSpec& spec, const PulseTrainSpec& train,
                         const PulseBudgetBounds& bounds = {});

/// Parametric resonance: modulate at twice the cavity frequency.
double parametric_drive_frequency(double cavity_frequency);

}  // namespace dce::plasma
