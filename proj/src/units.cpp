#include "dcesim/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dcesim/constants.hpp"
#include "dcesim/errors.hpp"

namespace dce::units {
namespace {

struct UnitEntry {
  std::string_view symbol;
  Dimension dim;
  double scale;  // SI value of one unit
};

constexpr double kEv = constants::kElectronVolt;

// "u" and the two UTF-8 micro signs are all accepted for 1e-6.
constexpr std::array kUnits{
    UnitEntry{"m", Dimension::kLength, 1.0},
    UnitEntry{"cm", Dimension::kLength, 1e-2},
    UnitEntry{"mm", Dimension::kLength, 1e-3},
    UnitEntry{"um", Dimension::kLength, 1e-6},
    UnitEntry{"µm", Dimension::kLength, 1e-6},
    UnitEntry{"μm", Dimension::kLength, 1e-6},
    UnitEntry{"nm", Dimension::kLength, 1e-9},
    UnitEntry{"m2", Dimension::kArea, 1.0},
    UnitEntry{"cm2", Dimension::kArea, 1e-4},
    UnitEntry{"mm2", Dimension::kArea, 1e-6},
    UnitEntry{"m3", Dimension::kVolume, 1.0},
    UnitEntry{"cm3", Dimension::kVolume, 1e-6},
    UnitEntry{"mm3", Dimension::kVolume, 1e-9},
    UnitEntry{"s", Dimension::kTime, 1.0},
    UnitEntry{"ms", Dimension::kTime, 1e-3},
    UnitEntry{"us", Dimension::kTime, 1e-6},
    UnitEntry{"µs", Dimension::kTime, 1e-6},
    UnitEntry{"μs", Dimension::kTime, 1e-6},
    UnitEntry{"ns", Dimension::kTime, 1e-9},
    UnitEntry{"ps", Dimension::kTime, 1e-12},
    UnitEntry{"fs", Dimension::kTime, 1e-15},
    UnitEntry{"Hz", Dimension::kFrequency, 1.0},
    UnitEntry{"kHz", Dimension::kFrequency, 1e3},
    UnitEntry{"MHz", Dimension::kFrequency, 1e6},
    UnitEntry{"GHz", Dimension::kFrequency, 1e9},
    UnitEntry{"rad/s", Dimension::kAngularFrequency, 1.0},
    UnitEntry{"J", Dimension::kEnergy, 1.0},
    UnitEntry{"mJ", Dimension::kEnergy, 1e-3},
    UnitEntry{"uJ", Dimension::kEnergy, 1e-6},
    UnitEntry{"µJ", Dimension::kEnergy, 1e-6},
    UnitEntry{"μJ", Dimension::kEnergy, 1e-6},
    UnitEntry{"eV", Dimension::kEnergy, kEv},
    UnitEntry{"meV", Dimension::kEnergy, 1e-3 * kEv},
    UnitEntry{"J/m2", Dimension::kArealEnergy, 1.0},
    UnitEntry{"J/cm2", Dimension::kArealEnergy, 1e4},
    UnitEntry{"mJ/cm2", Dimension::kArealEnergy, 1e1},
    UnitEntry{"uJ/cm2", Dimension::kArealEnergy, 1e-2},
    UnitEntry{"µJ/cm2", Dimension::kArealEnergy, 1e-2},
    UnitEntry{"μJ/cm2", Dimension::kArealEnergy, 1e-2},
    UnitEntry{"S/m", Dimension::kConductivity, 1.0},
    UnitEntry{"K", Dimension::kTemperature, 1.0},
    UnitEntry{"kg/m3", Dimension::kMassDensity, 1.0},
    UnitEntry{"g/cm3", Dimension::kMassDensity, 1e3},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view dimension_name(Dimension dim) {
  switch (dim) {
    case Dimension::kDimensionless: return "dimensionless";
    case Dimension::kLength: return "length";
    case Dimension::kArea: return "area";
    case Dimension::kVolume: return "volume";
    case Dimension::kTime: return "time";
    case Dimension::kFrequency: return "frequency";
    case Dimension::kAngularFrequency: return "angular frequency";
    case Dimension::kEnergy: return "energy";
    case Dimension::kArealEnergy: return "areal energy";
    case Dimension::kConductivity: return "conductivity";
    case Dimension::kTemperature: return "temperature";
    case Dimension::kMassDensity: return "mass density";
  }
  return "unknown";
}

std::string_view si_symbol(Dimension dim) {
  switch (dim) {
    case Dimension::kDimensionless: return "";
    case Dimension::kLength: return "m";
    case Dimension::kArea: return "m2";
    case Dimension::kVolume: return "m3";
    case Dimension::kTime: return "s";
    case Dimension::kFrequency: return "Hz";
    case Dimension::kAngularFrequency: return "rad/s";
    case Dimension::kEnergy: return "J";
    case Dimension::kArealEnergy: return "J/m2";
    case Dimension::kConductivity: return "S/m";
    case Dimension::kTemperature: return "K";
    case Dimension::kMassDensity: return "kg/m3";
  }
  return "";
}

double parse_quantity(std::string_view text, Dimension expected) {
  const std::string_view body = trim(text);
  double value = 0.0;
  const char* first = body.data();
  const char* last = body.data() + body.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{}) {
    throw ConfigError("cannot parse number in quantity '" + std::string(text) + "'");
  }
  const std::string_view unit = trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr)));

  if (unit.empty()) {
    if (expected != Dimension::kDimensionless) {
      throw ConfigError("quantity '" + std::string(text) + "' is missing a unit (expected " +
                        std::string(dimension_name(expected)) + ")");
    }
    return value;
  }
  for (const auto& entry : kUnits) {
    if (entry.symbol != unit) continue;
    if (entry.dim != expected) {
      throw ConfigError("unit mismatch in '" + std::string(text) + "': '" + std::string(unit) +
                        "' is " + std::string(dimension_name(entry.dim)) + ", expected " +
                        std::string(dimension_name(expected)));
    }
    return value * entry.scale;
  }
  throw ConfigError("unknown unit '" + std::string(unit) + "' in '" + std::string(text) + "'");
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    double back = 0.0;
    std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
    if (back == value) break;
  }
  return buf;
}

std::string format_quantity(double value_si, Dimension dim) {
  std::string out = format_number(value_si);
  if (dim != Dimension::kDimensionless) {
    out += ' ';
    out += si_symbol(dim);
  }
  return out;
}

}  // namespace dce::units
