#include "dcesim/cavity.hpp"

#include <cmath>

#include "dcesim/constants.hpp"
#include "dcesim/errors.hpp"

namespace dce::cavity {

using namespace dce::constants;

std::string to_string(ModeIndex mode) {
  std::string out = mode.family == ModeFamily::kTE ? "TE" : "TM";
  out += std::to_string(mode.m);
  out += std::to_string(mode.n);
  out += std::to_string(mode.p);
  return out;
}

ModeIndex parse_mode(const std::string& text) {
  // Single-digit indices only; larger orders go through the m/n/p fields.
  if (text.size() != 5 || (text.compare(0, 2, "TE") != 0 && text.compare(0, 2, "TM") != 0)) {
    throw DomainError("mode '" + text + "' is not of the form TEmnp or TMmnp");
  }
  ModeIndex mode;
  mode.family = text[1] == 'E' ? ModeFamily::kTE : ModeFamily::kTM;
  int* slots[3] = {&mode.m, &mode.n, &mode.p};
  for (int i = 0; i < 3; ++i) {
    const char ch = text[2 + i];
    if (ch < '0' || ch > '9') throw DomainError("mode '" + text + "' has a non-digit index");
    *slots[i] = ch - '0';
  }
  validate(mode);
  return mode;
}

void validate(const ModeIndex& mode) {
  const std::string name = to_string(mode);
  if (mode.m < 0 || mode.n < 0 || mode.p < 0) {
    throw DomainError(name + ": mode indices must be non-negative");
  }
  if (mode.family == ModeFamily::kTE && mode.m == 0 && mode.n == 0) {
    throw DomainError(name + ": TE modes require m and n not both zero");
  }
  if (mode.family == ModeFamily::kTM && (mode.m < 1 || mode.n < 1)) {
    throw DomainError(name + ": TM modes require m >= 1 and n >= 1");
  }
  const int nonzero = (mode.m != 0) + (mode.n != 0) + (mode.p != 0);
  if (nonzero < 2) {
    throw DomainError(name + ": at least two of (m, n, p) must be nonzero");
  }
}

void validate(const CavityGeometry& geom) {
  if (!(geom.width_a > 0.0) || !(geom.height_b > 0.0) || !(geom.length_d > 0.0)) {
    throw DomainError("cavity dimensions must be strictly positive");
  }
  if (!(geom.quality_factor > 0.0)) {
    throw DomainError("cavity quality factor must be strictly positive");
  }
}

double eigenfrequency(const CavityGeometry& geom, const ModeIndex& mode) {
  validate(geom);
  validate(mode);
  const double ka = mode.m / geom.width_a;
  const double kb = mode.n / geom.height_b;
  const double kd = mode.p / geom.length_d;
  return 0.5 * kSpeedOfLight * std::sqrt(ka * ka + kb * kb + kd * kd);
}

double skin_depth(double conductivity, double frequency) {
  if (!(conductivity > 0.0)) throw DomainError("skin_depth: conductivity must be > 0");
  if (!(frequency > 0.0) || std::isinf(frequency)) {
    throw DomainError("skin_depth: frequency must be finite and > 0");
  }
  const double omega = 2.0 * kPi * frequency;
  return std::sqrt(2.0 / (kVacuumPermeability * conductivity * omega));
}

double thermal_occupation(double frequency, double temperature) {
  if (!(frequency > 0.0)) throw DomainError("thermal_occupation: frequency must be > 0");
  if (!(temperature > 0.0)) throw DomainError("thermal_occupation: temperature must be > 0");
  const double x = kPlanck * frequency / (kBoltzmann * temperature);
  return 1.0 / std::expm1(x);
}

}  // namespace dce::cavity
