#pragma once

// One-parameter sweeps over an experiment config. Each point is a full
// report (plus optional parametric-sim growth columns); points that fail
// validation become error rows instead of aborting the sweep.

#include <cstddef>
#include <string>
#include <vector>

#include "dcesim/config.hpp"
#include "dcesim/simulation.hpp"

namespace dce::sweep {

enum class Spacing { kLinear, kLog };

struct SweepSpec {
  std::string path;  // dotted config field, e.g. "pulse_train.pulse_count"
  double min = 0.0;  // SI
  double max = 0.0;  // SI
  int count = 2;
  Spacing spacing = Spacing::kLinear;
  std::vector<std::string> columns;  // empty: default_columns()
  simulation::SimOptions sim;        // used by growth_* columns
};

/// Columns filled from the parametric-sim rather than the report.
inline constexpr const char* kGrowthColumns[] = {"growth_rate", "growth_analytic", "growth_fit_residual",
                                                "growth_above_threshold"};

std::vector<std::string> default_columns();

/// Parses a sweep endpoint given with units appropriate to `path`.
double parse_endpoint(const std::string& path, const std::string& text);

/// Throws ConfigError for unknown paths or columns and invalid ranges.
void validate(const SweepSpec& spec);

/// Sweep values in ascending order (integer fields are rounded).
std::vector<double> sweep_values(const SweepSpec& spec);

struct SweepRow {
  std::size_t index = 0;
  double value = 0.0;
  bool ok = true;
  std::string error;
  std::vector<std::string> cells;
};

struct SweepTable {
  std::string path;
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;

  std::size_t error_rows() const;
  std::string render_csv() const;
  /// JSON document with one object per row; numeric cells become numbers.
  std::string render_structured() const;
};

/// Points are evaluated concurrently; rows come back in sweep order.
SweepTable run(const config::ExperimentConfig& cfg, const SweepSpec& spec);

}  // namespace dce::sweep
