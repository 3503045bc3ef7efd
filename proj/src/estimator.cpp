#include "dcesim/estimator.hpp"

#include <cmath>
#include <limits>

#include "dcesim/constants.hpp"
#include "dcesim/errors.hpp"

namespace dce::estimator {

using constants::kPi;

double MirrorMotionSpec::velocity_ratio() const {
  return velocity_ratio_override ? *velocity_ratio_override : stroke / cavity_length;
}

void validate(const MirrorMotionSpec& spec) {
  if (!(spec.angular_frequency > 0.0)) throw DomainError("mirror motion: angular frequency must be > 0");
  if (!(spec.duration > 0.0)) throw DomainError("mirror motion: duration must be > 0");
  if (!(spec.cavity_length > 0.0)) throw DomainError("mirror motion: cavity length must be > 0");
  if (!(spec.stroke >= 0.0)) throw DomainError("mirror motion: stroke must be >= 0");
  if (!(spec.stroke < spec.cavity_length)) {
    throw DomainError("mirror motion: stroke must be smaller than the cavity length");
  }
  if (!(spec.quality_factor >= 1.0)) throw DomainError("mirror motion: quality factor must be >= 1");
  const double beta = spec.velocity_ratio();
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("mirror motion: v/c must lie in [0, 1)");
}

Sinh2 sinh_squared(double x) {
  if (!(x >= 0.0)) throw DomainError("sinh_squared: argument must be >= 0");
  Sinh2 out;
  if (x == 0.0) {
    out.log_value = -std::numeric_limits<double>::infinity();
    return out;
  }
  if (x < 20.0) {
    const double s = std::sinh(x);
    out.value = s * s;
    out.log_value = std::log(out.value);
    return out;
  }
  // sinh^2 x = e^{2x} (1 - e^{-2x})^2 / 4
  out.log_value = 2.0 * x - 2.0 * std::log(2.0) + 2.0 * std::log1p(-std::exp(-2.0 * x));
  if (out.log_value < std::log(std::numeric_limits<double>::max())) {
    out.value = std::exp(out.log_value);
  } else {
    out.value = std::numeric_limits<double>::infinity();
    out.saturated = true;
  }
  return out;
}

PhotonYield photon_yield(const MirrorMotionSpec& spec) {
  validate(spec);
  const double beta = spec.velocity_ratio();
  const double phase = spec.angular_frequency * spec.duration;
  PhotonYield y;
  y.n_single_mirror = phase / (3.0 * kPi) * beta * beta;
  y.n_cavity_linear = phase / (2.0 * kPi) * beta * beta * spec.quality_factor;
  const Sinh2 s = sinh_squared(phase * beta);
  y.n_cavity_exponential = s.value;
  y.log_n_cavity_exponential = s.log_value;
  y.exponential_saturated = s.saturated;
  return y;
}

double harmonic_velocity_ratio(double angular_frequency, double amplitude) {
  if (!(angular_frequency > 0.0)) throw DomainError("harmonic_velocity_ratio: angular frequency must be > 0");
  if (!(amplitude >= 0.0)) throw DomainError("harmonic_velocity_ratio: amplitude must be >= 0");
  return angular_frequency * amplitude / constants::kSpeedOfLight;
}

WallPower vibrating_wall_power(const VibratingWallSpec& spec) {
  if (!(spec.mass_density > 0.0) || !(spec.volume > 0.0) || !(spec.angular_frequency > 0.0) ||
      !(spec.amplitude > 0.0)) {
    throw DomainError("vibrating wall: density, volume, frequency and amplitude must all be > 0");
  }
  const double w = spec.angular_frequency;
  WallPower out;
  out.kinetic_energy = 0.5 * spec.mass_density * spec.volume * w * w * spec.amplitude * spec.amplitude;
  out.dissipation_time = kPi / (2.0 * w);
  out.power = out.kinetic_energy / out.dissipation_time;
  return out;
}

double acoustic_resonator_q(double frequency, double qf_product) {
  if (!(frequency > 0.0) || !(qf_product > 0.0)) {
    throw DomainError("acoustic_resonator_q: frequency and Q*f must be > 0");
  }
  return qf_product / frequency;
}

}  // namespace dce::estimator
