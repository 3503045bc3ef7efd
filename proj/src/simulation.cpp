#include "dcesim/simulation.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "json.hpp"

#include "dcesim/constants.hpp"
#include "dcesim/errors.hpp"
#include "dcesim/units.hpp"

namespace dce::simulation {

namespace {

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("sim." + key + ": expected an integer, got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    return units::parse_quantity(value, units::Dimension::kDimensionless);
  } catch (const ConfigError& e) {
    throw ConfigError("sim." + key + ": " + e.what());
  }
}

struct SummaryRow {
  const char* quantity;
  double value;
  const char* unit;
  const char* formula;
};

std::vector<SummaryRow> summary_rows(const ExperimentSimulation& sim) {
  const auto& g = sim.result.growth;
  return {
      {"natural_angular_frequency", sim.config.natural_angular_frequency, "rad/s", "derived"},
      {"drive_angular_frequency", sim.config.drive_angular_frequency, "rad/s", "derived"},
      {"modulation_depth", sim.config.modulation_depth, "", "derived"},
      {"quality_factor", sim.config.quality_factor, "", "derived"},
      {"drive_phase", sim.result.drive_phase, "rad", "derived"},
      {"fitted_rate", g.fitted_rate, "1/s", "derived"},
      {"analytic_rate", g.analytic_rate, "1/s", "derived"},
      {"fit_residual", g.fit_residual, "", "derived"},
      {"eq3_rate", sim.eq3_rate, "1/s", "eq3"},
      {"deviation_from_eq3", sim.deviation_from_eq3, "", "eq3"},
  };
}

}  // namespace

void apply_option(SimOptions& options, const std::string& key, const std::string& value) {
  if (key == "quality_factor") {
    options.quality_factor = parse_real(key, value);
  } else if (key == "modulation_depth") {
    options.modulation_depth = parse_real(key, value);
  } else if (key == "drive_phase") {
    options.drive_phase = parse_real(key, value);
  } else if (key == "periods") {
    options.periods = parse_int(key, value);
  } else if (key == "steps_per_period") {
    options.steps_per_period = parse_int(key, value);
  } else if (key == "transient_periods") {
    options.transient_periods = parse_int(key, value);
  } else {
    throw ConfigError("unknown simulation option 'sim." + key + "'");
  }
}

parametric::ParametricConfig parametric_config(const config::ResolvedExperiment& experiment,
                                               const SimOptions& options) {
  if (options.periods < 1) throw ConfigError("sim.periods must be >= 1");
  parametric::ParametricConfig pc;
  pc.natural_angular_frequency = 2.0 * constants::kPi * experiment.eigenfrequency;
  pc.drive_angular_frequency = 2.0 * pc.natural_angular_frequency * (1.0 + experiment.detuning);
  pc.modulation_depth =
      options.modulation_depth.value_or(parametric::modulation_depth_for(experiment.mirror.velocity_ratio()));
  pc.quality_factor = options.quality_factor.value_or(experiment.geometry.quality_factor);
  pc.drive_phase = options.drive_phase;
  pc.steps_per_period = options.steps_per_period;
  pc.transient_periods = options.transient_periods;
  pc.total_time = options.periods * pc.drive_period();
  parametric::validate(pc);
  return pc;
}

ExperimentSimulation simulate(const config::ExperimentConfig& cfg, const SimOptions& options) {
  const config::ResolvedExperiment experiment = config::resolve(cfg);
  ExperimentSimulation out;
  out.config = parametric_config(experiment, options);
  out.result = parametric::simulate(out.config);
  out.eq3_rate = 2.0 * experiment.mirror.angular_frequency * experiment.mirror.velocity_ratio();
  out.deviation_from_eq3 = out.eq3_rate > 0.0
                               ? std::abs(out.result.growth.fitted_rate - out.eq3_rate) / out.eq3_rate
                               : std::numeric_limits<double>::infinity();
  return out;
}

std::string render_summary_csv(const ExperimentSimulation& sim) {
  std::string out = "quantity,value,unit,module,formula\n";
  for (const SummaryRow& row : summary_rows(sim)) {
    out += std::string(row.quantity) + "," + units::format_number(row.value) + "," + row.unit +
           ",parametric-sim," + row.formula + "\n";
  }
  out += std::string("above_threshold,") + (sim.result.growth.above_threshold ? "true" : "false") +
         ",,parametric-sim,derived\n";
  return out;
}

std::string render_summary_structured(const ExperimentSimulation& sim) {
  nlohmann::ordered_json doc;
  for (const SummaryRow& row : summary_rows(sim)) {
    if (std::isfinite(row.value)) {
      doc[row.quantity] = row.value;
    } else {
      doc[row.quantity] = units::format_number(row.value);
    }
  }
  doc["above_threshold"] = sim.result.growth.above_threshold;
  doc["fit_points"] = sim.result.growth.fit_points;
  doc["trace_samples"] = sim.result.trace.size();
  return doc.dump(2) + "\n";
}

}  // namespace dce::simulation
