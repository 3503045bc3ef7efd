#pragma once

// Rectangular-cavity resonances, conductor skin depth and thermal photon
// occupation.

#include <string>

namespace dce::cavity {

enum class ModeFamily { kTE, kTM };

/// Mode indices (m, n, p) count half-wave variations along (a, b, d).
struct ModeIndex {
  ModeFamily family = ModeFamily::kTE;
  int m = 1;
  int n = 0;
  int p = 1;

  bool operator==(const ModeIndex&) const = default;
};

/// Interior dimensions in metres. The axis convention is whatever the caller
/// supplies: m pairs with width_a, n with height_b, p with length_d.
struct CavityGeometry {
  double width_a = 0.0;
  double height_b = 0.0;
  double length_d = 0.0;
  double quality_factor = 1.0;

  bool operator==(const CavityGeometry&) const = default;
};

std::string to_string(ModeIndex mode);            // "TE101"
ModeIndex parse_mode(const std::string& text);    // inverse of to_string

void validate(const ModeIndex& mode);
void validate(const CavityGeometry& geom);

/// f = (c/2) sqrt((m/a)^2 + (n/b)^2 + (p/d)^2), in Hz.
double eigenfrequency(const CavityGeometry& geom, const ModeIndex& mode);

/// delta = sqrt(2 / (mu0 sigma omega)), in metres.
double skin_depth(double conductivity, double frequency);

/// Bose-Einstein mean photon number 1 / (exp(hf/kT) - 1).
double thermal_occupation(double frequency, double temperature);

}  // namespace dce::cavity
