#include "dcesim/plasma_mirror.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dcesim/cavity.hpp"
#include "dcesim/errors.hpp"

namespace dce::plasma {

void validate(const PlasmaMirrorSpec& spec) {
  if (!(spec.wafer_thickness > 0.0)) throw DomainError("plasma mirror: wafer thickness must be > 0");
  if (!(spec.recombination_time >= 0.0)) throw DomainError("plasma mirror: recombination time must be >= 0");
  if (!(spec.laser_rise_time >= 0.0)) throw DomainError("plasma mirror: laser rise time must be >= 0");
  if (!(spec.areal_pulse_energy > 0.0)) throw DomainError("plasma mirror: areal pulse energy must be > 0");
  if (!(spec.illuminated_area > 0.0)) throw DomainError("plasma mirror: illuminated area must be > 0");
  if (!(spec.microwave_frequency > 0.0)) throw DomainError("plasma mirror: microwave frequency must be > 0");
  if (!(spec.plasma_conductivity > 0.0)) throw DomainError("plasma mirror: plasma conductivity must be > 0");
}

void validate(const PulseTrainSpec& train, const PulseBudgetBounds& bounds) {
  if (!(train.modulation_frequency > 0.0)) throw DomainError("pulse train: modulation frequency must be > 0");
  if (train.pulse_count < 1) throw DomainError("pulse train: pulse count must be positive");
  if (train.pulse_count < bounds.min_pulses || train.pulse_count > bounds.max_pulses) {
    throw DomainError("pulse train: pulse count " + std::to_string(train.pulse_count) +
                      " outside the laser budget [" + std::to_string(bounds.min_pulses) + ", " +
                      std::to_string(bounds.max_pulses) + "]");
  }
}

std::string_view to_string(LimitingFactor factor) {
  return factor == LimitingFactor::kLaserRise ? "laser_rise" : "recombination";
}

SwitchingResult switching_feasible(const PlasmaMirrorSpec& spec, double modulation_frequency,
                                   double duty_fraction) {
  validate(spec);
  if (!(modulation_frequency > 0.0)) throw DomainError("switching: modulation frequency must be > 0");
  if (!(duty_fraction > 0.0 && duty_fraction <= 1.0)) {
    throw DomainError("switching: duty fraction must lie in (0, 1]");
  }
  SwitchingResult out;
  out.needed_time = spec.laser_rise_time + spec.recombination_time;
  out.allowed_time = duty_fraction / modulation_frequency;
  out.limiting_factor = spec.laser_rise_time > spec.recombination_time ? LimitingFactor::kLaserRise
                                                                       : LimitingFactor::kRecombination;
  out.feasible = out.needed_time <= out.allowed_time;
  if (out.needed_time == 0.0) {
    out.margin = std::numeric_limits<double>::infinity();
    out.unbounded_margin = true;
  } else {
    out.margin = out.allowed_time / out.needed_time;
  }
  return out;
}

OpacityResult mirror_opacity_ok(const PlasmaMirrorSpec& spec) {
  validate(spec);
  OpacityResult out;
  out.skin_depth = cavity::skin_depth(spec.plasma_conductivity, spec.microwave_frequency);
  out.required_thickness = 3.0 * out.skin_depth;
  out.ok = spec.wafer_thickness >= out.required_thickness;
  return out;
}

LaserBudget laser_budget(const PlasmaMirrorSpec& spec, const PulseTrainSpec& train,
                         const PulseBudgetBounds& bounds) {
  validate(spec);
  validate(train, bounds);
  LaserBudget out;
  out.per_pulse = spec.areal_pulse_energy * spec.illuminated_area;
  out.total = out.per_pulse * static_cast<double>(train.pulse_count);
  out.duration = static_cast<double>(train.pulse_count) / train.modulation_frequency;
  return out;
}

double parametric_drive_frequency(double cavity_frequency) {
  if (!(cavity_frequency > 0.0)) throw DomainError("drive frequency: cavity frequency must be > 0");
  return 2.0 * cavity_frequency;
}

}  // namespace dce::plasma
