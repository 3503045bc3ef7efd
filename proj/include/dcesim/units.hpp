#pragma once

#include <string>
#include <string_view>

namespace dce::units {

enum class Dimension {
  kDimensionless,
  kLength,
  kArea,
  kVolume,
  kTime,
  kFrequency,
  kAngularFrequency,
  kEnergy,
  kArealEnergy,
  kConductivity,
  kTemperature,
  kMassDensity,
};

std::string_view dimension_name(Dimension dim);

/// SI symbol used when a quantity of this dimension is written back out.
std::string_view si_symbol(Dimension dim);

/// Parses "<number> <unit>" (e.g. "71 mm", "0.1 eV", "1 uJ/cm2") into SI.
/// Dimensionless quantities take a bare number; "inf" is accepted.
/// Throws ConfigError on malformed text, unknown units and unit/dimension
/// mismatches.
double parse_quantity(std::string_view text, Dimension expected);

/// Round-trip safe text form in SI units ("0.071 m").
std::string format_quantity(double value_si, Dimension dim);

/// Shortest "%.17g"-style text that parses back to the same double.
std::string format_number(double value);

}  // namespace dce::units
