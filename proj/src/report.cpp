#include "dcesim/report.hpp"

#include <cmath>

#include "json.hpp"

#include "dcesim/cavity.hpp"
#include "dcesim/detection.hpp"
#include "dcesim/errors.hpp"
#include "dcesim/estimator.hpp"
#include "dcesim/plasma_mirror.hpp"
#include "dcesim/units.hpp"

namespace dce::report {

namespace {

constexpr const char* kCavity = "cavity-em";
constexpr const char* kEstimator = "dce-estimator";
constexpr const char* kPlasma = "plasma-mirror";
constexpr const char* kDetection = "detection-chain";
constexpr const char* kReporter = "cli-reporter";

template <class Fn>
auto attributed(const char* module, Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw DomainError(std::string(module) + ": " + e.what());
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const Row* Report::find(const std::string& quantity) const {
  for (const Row& row : rows) {
    if (row.quantity == quantity) return &row;
  }
  return nullptr;
}

double Report::number(const std::string& quantity) const {
  const Row* row = find(quantity);
  if (!row || !std::holds_alternative<double>(row->value)) {
    throw std::out_of_range("report has no numeric row '" + quantity + "'");
  }
  return std::get<double>(row->value);
}

bool Report::flag(const std::string& quantity) const {
  const Row* row = find(quantity);
  if (!row || !std::holds_alternative<bool>(row->value)) {
    throw std::out_of_range("report has no boolean row '" + quantity + "'");
  }
  return std::get<bool>(row->value);
}

Report build_report(const config::ExperimentConfig& cfg) {
  const config::ResolvedExperiment x = config::resolve(cfg);

  Report rep;
  rep.name = cfg.metadata.name;
  rep.overrides = cfg.overrides;
  rep.links = x.links;
  auto add = [&rep](std::string quantity, Value value, std::string unit, const char* module,
                    std::string_view formula) {
    rep.rows.push_back({std::move(quantity), std::move(value), std::move(unit), module, std::string(formula)});
  };

  // cavity-em
  const double drive = attributed(kCavity, [&] { return plasma::parametric_drive_frequency(x.eigenfrequency); });
  const double occupation =
      attributed(kCavity, [&] { return cavity::thermal_occupation(x.eigenfrequency, x.temperature); });
  add("mode", cavity::to_string(x.mode), "", kCavity, "derived");
  add("eigenfrequency", x.eigenfrequency, "Hz", kCavity, "derived");
  add("parametric_drive_frequency", drive, "Hz", kCavity, "derived");
  add("quality_factor", x.geometry.quality_factor, "", kCavity, "derived");
  add("cavity_temperature", x.temperature, "K", kCavity, "derived");
  add("thermal_occupation", occupation, "", kCavity, "derived");

  // dce-estimator
  const estimator::PhotonYield yield = attributed(kEstimator, [&] { return estimator::photon_yield(x.mirror); });
  const estimator::WallPower wall =
      attributed(kEstimator, [&] { return estimator::vibrating_wall_power(x.reference_wall); });
  const double acoustic_q = attributed(
      kEstimator, [&] { return estimator::acoustic_resonator_q(x.acoustic.frequency, x.acoustic.qf_product); });
  add("mirror_angular_frequency", x.mirror.angular_frequency, "rad/s", kEstimator, "derived");
  add("motion_duration", x.mirror.duration, "s", kEstimator, "derived");
  add("mirror_stroke", x.mirror.stroke, "m", kEstimator, "derived");
  add("velocity_ratio", x.mirror.velocity_ratio(), "", kEstimator, "derived");
  add("n_single_mirror", yield.n_single_mirror, "", kEstimator, "eq1");
  add("n_cavity_linear", yield.n_cavity_linear, "", kEstimator, "eq2");
  add("n_cavity_exponential", yield.n_cavity_exponential, "", kEstimator, "eq3");
  add("log_n_cavity_exponential", yield.log_n_cavity_exponential, "", kEstimator, "eq3");
  add("exponential_saturated", yield.exponential_saturated, "", kEstimator, "eq3");
  add("wall_kinetic_energy", wall.kinetic_energy, "J", kEstimator, "derived");
  add("wall_dissipation_time", wall.dissipation_time, "s", kEstimator, "derived");
  add("wall_power", wall.power, "W", kEstimator, "derived");
  add("acoustic_q", acoustic_q, "", kEstimator, "derived");

  // plasma-mirror
  const auto switching = attributed(
      kPlasma, [&] { return plasma::switching_feasible(x.plasma, x.drive_frequency, x.duty_fraction); });
  const auto opacity = attributed(kPlasma, [&] { return plasma::mirror_opacity_ok(x.plasma); });
  const auto budget = attributed(kPlasma, [&] { return plasma::laser_budget(x.plasma, x.pulse_train, x.pulse_bounds); });
  add("modulation_frequency", x.drive_frequency, "Hz", kPlasma, "derived");
  add("detuning", x.detuning, "", kPlasma, "derived");
  add("switching_feasible", switching.feasible, "", kPlasma, "derived");
  add("switching_margin", switching.margin, "", kPlasma, "derived");
  add("switching_limiting_factor", std::string(plasma::to_string(switching.limiting_factor)), "", kPlasma,
      "derived");
  add("skin_depth", opacity.skin_depth, "m", kPlasma, "derived");
  add("required_thickness", opacity.required_thickness, "m", kPlasma, "derived");
  add("wafer_thickness", x.plasma.wafer_thickness, "m", kPlasma, "derived");
  add("opacity_ok", opacity.ok, "", kPlasma, "derived");
  add("illuminated_area", x.plasma.illuminated_area, "m2", kPlasma, "derived");
  add("pulse_count", static_cast<double>(x.pulse_train.pulse_count), "", kPlasma, "derived");
  add("laser_energy_per_pulse", budget.per_pulse, "J", kPlasma, "derived");
  add("laser_energy_total", budget.total, "J", kPlasma, "derived");
  add("excitation_duration", budget.duration, "s", kPlasma, "derived");

  // detection-chain
  const double floor1 = attributed(kDetection, [&] { return detection::single_run_floor(x.detection); });
  const auto verdict = attributed(kDetection, [&] { return detection::verdict(yield, x.detection); });
  const auto campaign = attributed(kDetection, [&] { return detection::campaign_duration(x.detection); });
  add("runs", static_cast<double>(x.detection.runs), "", kDetection, "derived");
  add("single_run_floor", floor1, "", kDetection, "derived");
  add("sensitivity_photons", verdict.sensitivity_photons, "", kDetection, "derived");
  for (const auto& v : verdict.per_formula) {
    const std::string tag(detection::formula_tag(v.formula));
    add("margin_" + tag, v.margin, "", kDetection, tag);
    add("detectable_" + tag, v.detectable, "", kDetection, tag);
    add("marginal_" + tag, v.marginal, "", kDetection, tag);
  }
  add("pessimistic_formula", std::string(detection::formula_tag(detection::FeasibilityVerdict::kPessimistic)), "",
      kDetection, "derived");
  add("detectable", verdict.pessimistic().detectable, "", kDetection, "eq2");
  add("plasma_noise_below_sensitivity", x.detection.plasma_noise_below_sensitivity, "", kDetection, "derived");
  add("campaign_duration", campaign.duration, "s", kDetection, "derived");
  add("campaign_exceeds_cap", campaign.exceeds_cap, "", kDetection, "derived");

  for (const config::LinkCheck& link : x.links) {
    add("link:" + link.field, std::string(config::to_string(link.status)), "", kReporter, "derived");
  }
  return rep;
}

std::string format_value(const Value& value) {
  if (const double* d = std::get_if<double>(&value)) return units::format_number(*d);
  if (const bool* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  return std::get<std::string>(value);
}

std::string render_csv(const Report& report) {
  std::string out = "quantity,value,unit,module,formula\n";
  for (const Row& row : report.rows) {
    out += csv_escape(row.quantity) + "," + csv_escape(format_value(row.value)) + "," + row.unit + "," +
           row.module + "," + row.formula + "\n";
  }
  return out;
}

std::string render_structured(const Report& report) {
  nlohmann::ordered_json doc;
  doc["name"] = report.name;
  doc["overrides"] = report.overrides;
  auto& links = doc["links"] = nlohmann::ordered_json::array();
  for (const config::LinkCheck& link : report.links) {
    links.push_back({{"field", link.field},
                     {"rule", link.rule},
                     {"status", config::to_string(link.status)},
                     {"value", link.value},
                     {"expected", link.expected}});
  }
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const Row& row : report.rows) {
    nlohmann::ordered_json entry;
    entry["quantity"] = row.quantity;
    if (const double* d = std::get_if<double>(&row.value)) {
      if (std::isfinite(*d)) {
        entry["value"] = *d;
      } else {
        entry["value"] = units::format_number(*d);
      }
    } else if (const bool* b = std::get_if<bool>(&row.value)) {
      entry["value"] = *b;
    } else {
      entry["value"] = std::get<std::string>(row.value);
    }
    entry["unit"] = row.unit;
    entry["module"] = row.module;
    entry["formula"] = row.formula;
    rows.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace dce::report
