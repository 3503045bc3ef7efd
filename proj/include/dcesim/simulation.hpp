#pragma once

// Drives the parametric-oscillator cross-check from an experiment config.
// The cavity mode sets w0, the drive sits at 2 w0 (1 + detuning), and the
// modulation depth follows the bridge eps = 4 v/c.

#include <optional>
#include <string>

#include "dcesim/config.hpp"
#include "dcesim/parametric.hpp"

namespace dce::simulation {

struct SimOptions {
  std::optional<double> quality_factor;    // default: cavity Q; +inf = undamped
  std::optional<double> modulation_depth;  // default: 4 v/c
  std::optional<double> drive_phase;       // default: maximal-gain scan
  int periods = 400;                       // drive periods integrated
  int steps_per_period = 128;
  int transient_periods = parametric::kDefaultTransientPeriods;
};

/// Applies a "sim.<field>=value" style override (key without the prefix).
void apply_option(SimOptions& options, const std::string& key, const std::string& value);

parametric::ParametricConfig parametric_config(const config::ResolvedExperiment& experiment,
                                               const SimOptions& options);

struct ExperimentSimulation {
  parametric::ParametricConfig config;
  parametric::SimulationResult result;
  double eq3_rate = 0.0;            // 2 w (v/c), energy exponent of sinh^2
  double deviation_from_eq3 = 0.0;  // |fitted - eq3| / eq3, inf when eq3 = 0
};

ExperimentSimulation simulate(const config::ExperimentConfig& cfg, const SimOptions& options);

/// Key/value summary as CSV ("quantity,value,unit,module,formula").
std::string render_summary_csv(const ExperimentSimulation& sim);
/// The same summary as a JSON document.
std::string render_summary_structured(const ExperimentSimulation& sim);

}  // namespace dce::simulation
