#include "dcesim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "dcesim/constants.hpp"
#include "dcesim/errors.hpp"

namespace dce::config {

using Json = nlohmann::ordered_json;
using units::Dimension;
using Kind = FieldInfo::Kind;

namespace {

// One leaf of the document. `get` returns nullopt for an absent optional
// field; `set` receives an already type-checked value.
struct Binding {
  std::string path;
  FieldInfo info;
  std::function<std::optional<Json>(const ExperimentConfig&)> get;
  std::function<void(ExperimentConfig&, const Json&)> set;
};

Json quantity_json(double si, Dimension dim) {
  if (dim == Dimension::kDimensionless) {
    if (std::isfinite(si)) return si;
    return units::format_number(si);
  }
  return units::format_quantity(si, dim);
}

template <class Access>
Binding quantity(std::string path, Dimension dim, Access access) {
  return {std::move(path), {Kind::kQuantity, dim, false},
          [=](const ExperimentConfig& c) -> std::optional<Json> { return quantity_json(access(c), dim); },
          [=](ExperimentConfig& c, const Json& v) { access(c) = v.get<double>(); }};
}

template <class Access>
Binding optional_quantity(std::string path, Dimension dim, Access access) {
  return {std::move(path), {Kind::kQuantity, dim, true},
          [=](const ExperimentConfig& c) -> std::optional<Json> {
            const auto& field = access(c);
            if (!field) return std::nullopt;
            return quantity_json(*field, dim);
          },
          [=](ExperimentConfig& c, const Json& v) { access(c) = v.get<double>(); }};
}

// Fields with a default may be omitted from the document but are always
// written back out.
template <class Access>
Binding defaulted_quantity(std::string path, Dimension dim, Access access) {
  Binding b = quantity(std::move(path), dim, access);
  b.info.optional = true;
  return b;
}

template <class Access>
Binding integer(std::string path, bool has_default, Access access) {
  return {std::move(path), {Kind::kInteger, Dimension::kDimensionless, has_default},
          [=](const ExperimentConfig& c) -> std::optional<Json> { return access(c); },
          [=](ExperimentConfig& c, const Json& v) { access(c) = v.get<std::int64_t>(); }};
}

template <class Access>
Binding boolean(std::string path, Access access) {
  return {std::move(path), {Kind::kBoolean, Dimension::kDimensionless, true},
          [=](const ExperimentConfig& c) -> std::optional<Json> { return access(c); },
          [=](ExperimentConfig& c, const Json& v) { access(c) = v.get<bool>(); }};
}

template <class Access>
Binding text(std::string path, Access access) {
  return {std::move(path), {Kind::kText, Dimension::kDimensionless, true},
          [=](const ExperimentConfig& c) -> std::optional<Json> { return access(c); },
          [=](ExperimentConfig& c, const Json& v) { access(c) = v.get<std::string>(); }};
}

#define FIELD(expr) [](auto& c) -> auto& { return c.expr; }

const std::vector<Binding>& bindings() {
  static const std::vector<Binding> table = [] {
    std::vector<Binding> t;
    t.push_back(text("metadata.name", FIELD(metadata.name)));
    t.push_back(text("metadata.notes", FIELD(metadata.notes)));

    t.push_back(quantity("cavity.width_a", Dimension::kLength, FIELD(cavity.geometry.width_a)));
    t.push_back(quantity("cavity.height_b", Dimension::kLength, FIELD(cavity.geometry.height_b)));
    t.push_back(quantity("cavity.length_d", Dimension::kLength, FIELD(cavity.geometry.length_d)));
    t.push_back(quantity("cavity.quality_factor", Dimension::kDimensionless,
                         FIELD(cavity.geometry.quality_factor)));
    t.push_back({"cavity.mode", {Kind::kMode, Dimension::kDimensionless, false},
                 [](const ExperimentConfig& c) -> std::optional<Json> { return cavity::to_string(c.cavity.mode); },
                 [](ExperimentConfig& c, const Json& v) { c.cavity.mode = cavity::parse_mode(v.get<std::string>()); }});
    t.push_back(defaulted_quantity("cavity.temperature", Dimension::kTemperature, FIELD(cavity.temperature)));

    t.push_back(optional_quantity("mirror_motion.frequency", Dimension::kFrequency, FIELD(mirror_motion.frequency)));
    t.push_back(optional_quantity("mirror_motion.duration", Dimension::kTime, FIELD(mirror_motion.duration)));
    t.push_back(optional_quantity("mirror_motion.stroke", Dimension::kLength, FIELD(mirror_motion.stroke)));
    t.push_back(optional_quantity("mirror_motion.cavity_length", Dimension::kLength,
                                  FIELD(mirror_motion.cavity_length)));
    t.push_back(optional_quantity("mirror_motion.velocity_ratio", Dimension::kDimensionless,
                                  FIELD(mirror_motion.velocity_ratio)));
    t.push_back(optional_quantity("mirror_motion.quality_factor", Dimension::kDimensionless,
                                  FIELD(mirror_motion.quality_factor)));

    t.push_back(quantity("plasma.wafer_thickness", Dimension::kLength, FIELD(plasma.wafer_thickness)));
    t.push_back(quantity("plasma.recombination_time", Dimension::kTime, FIELD(plasma.recombination_time)));
    t.push_back(quantity("plasma.laser_rise_time", Dimension::kTime, FIELD(plasma.laser_rise_time)));
    t.push_back(quantity("plasma.areal_pulse_energy", Dimension::kArealEnergy, FIELD(plasma.areal_pulse_energy)));
    t.push_back(optional_quantity("plasma.illuminated_area", Dimension::kArea, FIELD(plasma.illuminated_area)));
    t.push_back(optional_quantity("plasma.microwave_frequency", Dimension::kFrequency,
                                  FIELD(plasma.microwave_frequency)));
    t.push_back(quantity("plasma.plasma_conductivity", Dimension::kConductivity, FIELD(plasma.plasma_conductivity)));
    t.push_back(defaulted_quantity("plasma.duty_fraction", Dimension::kDimensionless, FIELD(plasma.duty_fraction)));

    t.push_back(optional_quantity("pulse_train.modulation_frequency", Dimension::kFrequency,
                                  FIELD(pulse_train.modulation_frequency)));
    t.push_back(defaulted_quantity("pulse_train.detuning", Dimension::kDimensionless, FIELD(pulse_train.detuning)));
    t.push_back(integer("pulse_train.pulse_count", false, FIELD(pulse_train.pulse_count)));
    t.push_back(integer("pulse_train.min_pulses", true, FIELD(pulse_train.bounds.min_pulses)));
    t.push_back(integer("pulse_train.max_pulses", true, FIELD(pulse_train.bounds.max_pulses)));

    t.push_back(defaulted_quantity("detection.min_detectable_energy", Dimension::kEnergy,
                                   FIELD(detection.min_detectable_energy)));
    t.push_back(optional_quantity("detection.signal_frequency", Dimension::kFrequency,
                                  FIELD(detection.signal_frequency)));
    t.push_back(integer("detection.runs", true, FIELD(detection.runs)));
    t.push_back(defaulted_quantity("detection.run_repetition_interval", Dimension::kTime,
                                   FIELD(detection.run_repetition_interval)));
    t.push_back(defaulted_quantity("detection.campaign_cap", Dimension::kTime, FIELD(detection.campaign_cap)));
    t.push_back(boolean("detection.plasma_noise_below_sensitivity", FIELD(detection.plasma_noise_below_sensitivity)));

    t.push_back(defaulted_quantity("reference_wall.mass_density", Dimension::kMassDensity,
                                   FIELD(reference_wall.mass_density)));
    t.push_back(defaulted_quantity("reference_wall.volume", Dimension::kVolume, FIELD(reference_wall.volume)));
    t.push_back(defaulted_quantity("reference_wall.frequency", Dimension::kFrequency, FIELD(reference_wall.frequency)));
    t.push_back(defaulted_quantity("reference_wall.amplitude", Dimension::kLength, FIELD(reference_wall.amplitude)));

    t.push_back(defaulted_quantity("acoustic.frequency", Dimension::kFrequency, FIELD(acoustic.frequency)));
    t.push_back(defaulted_quantity("acoustic.qf_product", Dimension::kFrequency, FIELD(acoustic.qf_product)));
    return t;
  }();
  return table;
}

#undef FIELD

const Binding* find_binding(std::string_view path) {
  for (const Binding& b : bindings()) {
    if (b.path == path) return &b;
  }
  return nullptr;
}

std::pair<std::string, std::string> split_path(const std::string& path) {
  const auto dot = path.find('.');
  return {path.substr(0, dot), path.substr(dot + 1)};
}

std::int64_t parse_integer(const std::string& text, const std::string& path) {
  std::int64_t value = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc{} || ptr != last) throw ConfigError(path + ": expected an integer, got '" + text + "'");
  return value;
}

// Type-checks a document value against the schema and converts it to the
// canonical form the binding setter expects.
Json normalize(const Binding& b, const Json& raw) {
  const std::string& path = b.path;
  try {
    switch (b.info.kind) {
      case Kind::kQuantity:
        if (raw.is_number()) {
          if (b.info.dimension != Dimension::kDimensionless) {
            throw ConfigError("quantity needs an explicit unit (" +
                              std::string(units::dimension_name(b.info.dimension)) + ")");
          }
          return raw.get<double>();
        }
        if (raw.is_string()) return units::parse_quantity(raw.get<std::string>(), b.info.dimension);
        throw ConfigError("expected a quantity string such as \"1 " +
                          std::string(units::si_symbol(b.info.dimension)) + "\"");
      case Kind::kInteger:
        if (raw.is_number_integer()) return raw.get<std::int64_t>();
        if (raw.is_string()) return parse_integer(raw.get<std::string>(), path);
        throw ConfigError("expected an integer");
      case Kind::kBoolean:
        if (raw.is_boolean()) return raw.get<bool>();
        if (raw == "true") return true;
        if (raw == "false") return false;
        throw ConfigError("expected true or false");
      case Kind::kText:
      case Kind::kMode:
        if (raw.is_string()) return raw;
        throw ConfigError("expected a string");
    }
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return raw;
}

ExperimentConfig from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("configuration document must be a JSON object");

  std::set<std::string> sections;
  for (const Binding& b : bindings()) sections.insert(split_path(b.path).first);

  ExperimentConfig cfg;
  std::set<std::string> seen;
  for (const auto& [section, body] : doc.items()) {
    if (section == "overrides") continue;
    if (!sections.count(section)) throw ConfigError("unknown section '" + section + "'");
    if (!body.is_object()) throw ConfigError(section + ": section must be an object");
    for (const auto& [key, raw] : body.items()) {
      const std::string path = section + "." + key;
      const Binding* b = find_binding(path);
      if (!b) throw ConfigError("unknown key '" + path + "'");
      try {
        b->set(cfg, normalize(*b, raw));
      } catch (const DomainError& e) {
        throw ConfigError(path + ": " + e.what());
      }
      seen.insert(path);
    }
  }
  for (const Binding& b : bindings()) {
    if (!b.info.optional && !seen.count(b.path)) throw ConfigError("missing required field '" + b.path + "'");
  }

  if (doc.contains("overrides")) {
    const Json& list = doc.at("overrides");
    if (!list.is_array()) throw ConfigError("overrides: expected an array of field paths");
    std::set<std::string> unique;
    for (const Json& item : list) {
      if (!item.is_string()) throw ConfigError("overrides: entries must be strings");
      const std::string path = item.get<std::string>();
      if (!find_binding(path)) throw ConfigError("overrides: unknown field '" + path + "'");
      unique.insert(path);
    }
    cfg.overrides.assign(unique.begin(), unique.end());
  }
  return cfg;
}

Json to_json(const ExperimentConfig& cfg) {
  Json doc = Json::object();
  for (const Binding& b : bindings()) {
    const auto value = b.get(cfg);
    if (!value) continue;
    if (b.info.kind == Kind::kText && value->get<std::string>().empty()) continue;
    const auto [section, key] = split_path(b.path);
    doc[section][key] = *value;
  }
  if (!cfg.overrides.empty()) doc["overrides"] = cfg.overrides;
  return doc;
}

class LinkChecker {
 public:
  explicit LinkChecker(const ExperimentConfig& cfg) : cfg_(cfg) {}

  // Uses `explicit_value` if present (checked against `expected`), otherwise
  // derives it.
  double apply(const std::string& field, const std::string& rule, const std::optional<double>& explicit_value,
               double expected) {
    LinkCheck check{field, rule, LinkStatus::kDerived, expected, expected};
    if (explicit_value) {
      check.value = *explicit_value;
      if (cfg_.is_overridden(field)) {
        check.status = LinkStatus::kOverridden;
      } else {
        const double deviation = expected == 0.0 ? std::abs(*explicit_value)
                                                 : std::abs(*explicit_value - expected) / std::abs(expected);
        if (!(deviation <= kLinkTolerance)) {
          throw ConfigError("cross-link violated: " + field + " = " + units::format_number(*explicit_value) +
                            " but " + rule + " gives " + units::format_number(expected) +
                            " (relative deviation " + units::format_number(deviation) +
                            "); list '" + field + "' in overrides to accept it");
        }
        check.status = LinkStatus::kSatisfied;
      }
    }
    links_.push_back(check);
    return check.value;
  }

  std::vector<LinkCheck> take() { return std::move(links_); }

 private:
  const ExperimentConfig& cfg_;
  std::vector<LinkCheck> links_;
};

}  // namespace

bool ExperimentConfig::is_overridden(std::string_view path) const {
  return std::binary_search(overrides.begin(), overrides.end(), path);
}

std::string_view to_string(LinkStatus status) {
  switch (status) {
    case LinkStatus::kDerived: return "derived";
    case LinkStatus::kSatisfied: return "satisfied";
    case LinkStatus::kOverridden: return "overridden";
  }
  return "derived";
}

const std::map<std::string, FieldInfo>& schema() {
  static const std::map<std::string, FieldInfo> table = [] {
    std::map<std::string, FieldInfo> t;
    for (const Binding& b : bindings()) t.emplace(b.path, b.info);
    return t;
  }();
  return table;
}

ResolvedExperiment resolve(const ExperimentConfig& cfg) {
  using constants::kPi;
  ResolvedExperiment r;
  r.geometry = cfg.cavity.geometry;
  r.mode = cfg.cavity.mode;
  r.temperature = cfg.cavity.temperature;
  r.eigenfrequency = cavity::eigenfrequency(r.geometry, r.mode);
  const double f = r.eigenfrequency;

  LinkChecker links(cfg);

  const double base_drive = links.apply("pulse_train.modulation_frequency", "2 x eigenfrequency",
                                        cfg.pulse_train.modulation_frequency, plasma::parametric_drive_frequency(f));
  r.detuning = links.apply("pulse_train.detuning", "exact parametric resonance", cfg.pulse_train.detuning, 0.0);
  if (!(r.detuning > -1.0)) throw ConfigError("pulse_train.detuning must be > -1");
  r.drive_frequency = base_drive * (1.0 + r.detuning);

  r.pulse_train.modulation_frequency = r.drive_frequency;
  r.pulse_train.pulse_count = cfg.pulse_train.pulse_count;
  r.pulse_bounds = cfg.pulse_train.bounds;
  plasma::validate(r.pulse_train, r.pulse_bounds);

  const double mirror_frequency =
      links.apply("mirror_motion.frequency", "eigenfrequency", cfg.mirror_motion.frequency, f);
  r.mirror.angular_frequency = 2.0 * kPi * mirror_frequency * (1.0 + r.detuning);
  r.mirror.cavity_length = links.apply("mirror_motion.cavity_length", "cavity.length_d",
                                       cfg.mirror_motion.cavity_length, r.geometry.length_d);
  r.mirror.stroke = links.apply("mirror_motion.stroke", "plasma.wafer_thickness / 2", cfg.mirror_motion.stroke,
                                0.5 * cfg.plasma.wafer_thickness);
  if (cfg.mirror_motion.velocity_ratio) {
    r.mirror.velocity_ratio_override =
        links.apply("mirror_motion.velocity_ratio", "stroke / cavity_length", cfg.mirror_motion.velocity_ratio,
                    r.mirror.stroke / r.mirror.cavity_length);
  }
  r.mirror.quality_factor = links.apply("mirror_motion.quality_factor", "cavity.quality_factor",
                                        cfg.mirror_motion.quality_factor, r.geometry.quality_factor);
  r.mirror.duration =
      links.apply("mirror_motion.duration", "pulse_count / modulation_frequency", cfg.mirror_motion.duration,
                  static_cast<double>(r.pulse_train.pulse_count) / r.drive_frequency);
  estimator::validate(r.mirror);

  r.plasma.wafer_thickness = cfg.plasma.wafer_thickness;
  r.plasma.recombination_time = cfg.plasma.recombination_time;
  r.plasma.laser_rise_time = cfg.plasma.laser_rise_time;
  r.plasma.areal_pulse_energy = cfg.plasma.areal_pulse_energy;
  r.plasma.illuminated_area =
      cfg.plasma.illuminated_area.value_or(r.geometry.width_a * r.geometry.height_b);
  r.plasma.microwave_frequency =
      links.apply("plasma.microwave_frequency", "eigenfrequency", cfg.plasma.microwave_frequency, f);
  r.plasma.plasma_conductivity = cfg.plasma.plasma_conductivity;
  plasma::validate(r.plasma);
  r.duty_fraction = cfg.plasma.duty_fraction;
  if (!(r.duty_fraction > 0.0 && r.duty_fraction <= 1.0)) {
    throw DomainError("plasma.duty_fraction must lie in (0, 1]");
  }

  r.detection.min_detectable_energy = cfg.detection.min_detectable_energy;
  r.detection.signal_frequency =
      links.apply("detection.signal_frequency", "eigenfrequency", cfg.detection.signal_frequency, f);
  r.detection.runs = cfg.detection.runs;
  r.detection.run_repetition_interval = cfg.detection.run_repetition_interval;
  r.detection.campaign_cap = cfg.detection.campaign_cap;
  r.detection.plasma_noise_below_sensitivity = cfg.detection.plasma_noise_below_sensitivity;
  detection::validate(r.detection);

  r.reference_wall.mass_density = cfg.reference_wall.mass_density;
  r.reference_wall.volume = cfg.reference_wall.volume;
  r.reference_wall.angular_frequency = 2.0 * kPi * cfg.reference_wall.frequency;
  r.reference_wall.amplitude = cfg.reference_wall.amplitude;
  r.acoustic = cfg.acoustic;

  if (!(r.temperature > 0.0)) throw DomainError("cavity.temperature must be > 0");

  r.links = links.take();
  return r;
}

ExperimentConfig load_config(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(e.what());
  }
  ExperimentConfig cfg = from_json(doc);
  resolve(cfg);
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config(buf.str());
}

std::string serialize(const ExperimentConfig& config) { return to_json(config).dump(2) + "\n"; }

ExperimentConfig with_override(const ExperimentConfig& config, const std::string& path, const std::string& value) {
  const Binding* b = find_binding(path);
  if (!b) throw ConfigError("override: unknown field '" + path + "'");
  Json doc = to_json(config);
  const auto [section, key] = split_path(path);
  doc[section][key] = value;
  auto& list = doc["overrides"];
  if (!list.is_array()) list = Json::array();
  list.push_back(path);
  ExperimentConfig out = from_json(doc);
  resolve(out);
  return out;
}

}  // namespace dce::config
