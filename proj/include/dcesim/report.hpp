#pragma once

// Feasibility report for one experiment configuration. Every row names the
// module that produced it and the formula it came from (eq1 | eq2 | eq3 |
// derived). Rendering is deterministic.

#include <string>
#include <variant>
#include <vector>

#include "dcesim/config.hpp"

namespace dce::report {

using Value = std::variant<double, bool, std::string>;

struct Row {
  std::string quantity;
  Value value;
  std::string unit;
  std::string module;
  std::string formula;
};

struct Report {
  std::string name;
  std::vector<std::string> overrides;
  std::vector<config::LinkCheck> links;
  std::vector<Row> rows;

  /// Row by quantity name, nullptr if absent.
  const Row* find(const std::string& quantity) const;
  double number(const std::string& quantity) const;
  bool flag(const std::string& quantity) const;
};

/// Domain errors are rethrown with the failing module prefixed.
Report build_report(const config::ExperimentConfig& cfg);

std::string format_value(const Value& value);

std::string render_csv(const Report& report);
std::string render_structured(const Report& report);

}  // namespace dce::report
