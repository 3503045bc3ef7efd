#pragma once

// Photon-number predictions for an effectively moving mirror, alone and as a
// cavity wall, and the power bill of doing the same thing mechanically.

#include <optional>

namespace dce::estimator {

struct MirrorMotionSpec {
  double angular_frequency = 0.0;  // rad/s
  double duration = 0.0;           // s
  double stroke = 0.0;             // m, half the switched slab thickness
  double cavity_length = 0.0;      // m
  double quality_factor = 1.0;
  // Explicit v/c, used instead of stroke / cavity_length when present
  // (e.g. a rounded 3e-3 reference value).
  std::optional<double> velocity_ratio_override;

  /// v/c, either the override or stroke / cavity_length.
  double velocity_ratio() const;

  bool operator==(const MirrorMotionSpec&) const = default;
};

void validate(const MirrorMotionSpec& spec);

struct PhotonYield {
  double n_single_mirror = 0.0;       // (wt / 3pi) (v/c)^2
  double n_cavity_linear = 0.0;       // (wt / 2pi) (v/c)^2 Q
  double n_cavity_exponential = 0.0;  // sinh^2(wt v/c), +inf when saturated
  double log_n_cavity_exponential = 0.0;  // natural log, finite past saturation
  bool exponential_saturated = false;
};

PhotonYield photon_yield(const MirrorMotionSpec& spec);

/// sinh^2(x) for x >= 0 with its natural log. Past the double range the value
/// is +inf and `saturated` is set; `log_value` stays exact.
struct Sinh2 {
  double value = 0.0;
  double log_value = 0.0;
  bool saturated = false;
};
Sinh2 sinh_squared(double x);

/// v/c for harmonic motion of amplitude `amplitude` at `angular_frequency`
/// (v = omega * dx). Not the convention used by photon_yield.
double harmonic_velocity_ratio(double angular_frequency, double amplitude);

struct VibratingWallSpec {
  double mass_density = 0.0;       // kg/m^3
  double volume = 0.0;             // m^3
  double angular_frequency = 0.0;  // rad/s
  double amplitude = 0.0;          // m
};

struct WallPower {
  double kinetic_energy = 0.0;    // J, rho V w^2 dx^2 / 2
  double dissipation_time = 0.0;  // s, pi / (2w)
  double power = 0.0;             // W
};

WallPower vibrating_wall_power(const VibratingWallSpec& spec);

/// Achievable mechanical Q for a resonator with a fixed Q*f figure of merit.
double acoustic_resonator_q(double frequency, double qf_product);

}  // namespace dce::estimator
