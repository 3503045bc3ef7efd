#include "dcesim/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <thread>

#include "json.hpp"

#include "dcesim/errors.hpp"
#include "dcesim/report.hpp"
#include "dcesim/units.hpp"

namespace dce::sweep {

namespace {

bool is_growth_column(const std::string& column) {
  return std::find(std::begin(kGrowthColumns), std::end(kGrowthColumns), column) != std::end(kGrowthColumns);
}

const config::FieldInfo& field_info(const std::string& path) {
  const auto& schema = config::schema();
  const auto it = schema.find(path);
  if (it == schema.end()) throw ConfigError("sweep: unknown parameter path '" + path + "'");
  if (it->second.kind != config::FieldInfo::Kind::kQuantity &&
      it->second.kind != config::FieldInfo::Kind::kInteger) {
    throw ConfigError("sweep: parameter '" + path + "' is not numeric");
  }
  return it->second;
}

std::vector<std::string> report_columns(const config::ExperimentConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& row : report::build_report(cfg).rows) names.push_back(row.quantity);
  return names;
}

SweepRow evaluate(const config::ExperimentConfig& base, const SweepSpec& spec,
                  const std::vector<std::string>& columns, std::size_t index, double value) {
  SweepRow row;
  row.index = index;
  row.value = value;
  try {
    const auto& info = field_info(spec.path);
    const std::string text = info.kind == config::FieldInfo::Kind::kInteger
                                 ? std::to_string(std::llround(value))
                                 : units::format_quantity(value, info.dimension);
    const config::ExperimentConfig point = config::with_override(base, spec.path, text);
    const report::Report rep = report::build_report(point);

    const bool needs_sim = std::any_of(columns.begin(), columns.end(), is_growth_column);
    simulation::ExperimentSimulation sim;
    if (needs_sim) sim = simulation::simulate(point, spec.sim);

    for (const std::string& column : columns) {
      if (column == "growth_rate") {
        row.cells.push_back(units::format_number(sim.result.growth.fitted_rate));
      } else if (column == "growth_analytic") {
        row.cells.push_back(units::format_number(sim.result.growth.analytic_rate));
      } else if (column == "growth_fit_residual") {
        row.cells.push_back(units::format_number(sim.result.growth.fit_residual));
      } else if (column == "growth_above_threshold") {
        row.cells.push_back(sim.result.growth.above_threshold ? "true" : "false");
      } else {
        const report::Row* r = rep.find(column);
        row.cells.push_back(r ? report::format_value(r->value) : "");
      }
    }
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
    row.cells.assign(columns.size(), "");
  }
  return row;
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

std::vector<std::string> default_columns() {
  return {"n_single_mirror",  "n_cavity_linear", "n_cavity_exponential", "motion_duration",
          "excitation_duration", "margin_eq2",   "detectable"};
}

double parse_endpoint(const std::string& path, const std::string& text) {
  return units::parse_quantity(text, field_info(path).dimension);
}

void validate(const SweepSpec& spec) {
  field_info(spec.path);
  if (!(spec.min < spec.max)) throw ConfigError("sweep: range requires min < max");
  if (spec.count < 2) throw ConfigError("sweep: point count must be >= 2");
  if (spec.spacing == Spacing::kLog && !(spec.min > 0.0)) {
    throw ConfigError("sweep: log spacing requires a positive range");
  }
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  validate(spec);
  const bool integral = field_info(spec.path).kind == config::FieldInfo::Kind::kInteger;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    const double s = static_cast<double>(i) / (spec.count - 1);
    double v = spec.spacing == Spacing::kLinear
                   ? spec.min + (spec.max - spec.min) * s
                   : std::exp(std::log(spec.min) + (std::log(spec.max) - std::log(spec.min)) * s);
    if (i == spec.count - 1) v = spec.max;
    if (integral) v = static_cast<double>(std::llround(v));
    values.push_back(v);
  }
  return values;
}

std::size_t SweepTable::error_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok; }));
}

std::string SweepTable::render_csv() const {
  std::string out = "index," + path + ",status";
  for (const std::string& c : columns) out += "," + c;
  out += ",error\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.index) + "," + units::format_number(row.value) + "," + (row.ok ? "ok" : "error");
    for (const std::string& cell : row.cells) out += "," + csv_escape(cell);
    out += "," + csv_escape(row.error) + "\n";
  }
  return out;
}

std::string SweepTable::render_structured() const {
  auto cell_value = [](const std::string& cell) -> nlohmann::ordered_json {
    if (cell.empty()) return nullptr;
    if (cell == "true" || cell == "false") return cell == "true";
    double number = 0.0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), number);
    if (ec == std::errc() && end == cell.data() + cell.size() && std::isfinite(number)) return number;
    return cell;
  };
  nlohmann::ordered_json doc;
  doc["parameter"] = path;
  doc["columns"] = columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json entry;
    entry["index"] = row.index;
    entry[path] = row.value;
    entry["status"] = row.ok ? "ok" : "error";
    for (std::size_t i = 0; i < row.cells.size() && i < columns.size(); ++i) entry[columns[i]] = cell_value(row.cells[i]);
    if (!row.ok) entry["error"] = row.error;
    doc["rows"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

SweepTable run(const config::ExperimentConfig& cfg, const SweepSpec& spec) {
  const std::vector<double> values = sweep_values(spec);

  SweepTable table;
  table.path = spec.path;
  table.columns = spec.columns.empty() ? default_columns() : spec.columns;
  const std::vector<std::string> known = report_columns(cfg);
  for (const std::string& column : table.columns) {
    if (!is_growth_column(column) && std::find(known.begin(), known.end(), column) == known.end()) {
      throw ConfigError("sweep: unknown output column '" + column + "'");
    }
  }

  // Bounded fan-out; each point only reads shared inputs.
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  table.rows.resize(values.size());
  for (std::size_t start = 0; start < values.size(); start += workers) {
    const std::size_t stop = std::min(values.size(), start + workers);
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, evaluate, std::cref(cfg), std::cref(spec),
                                 std::cref(table.columns), i, values[i]));
    }
    for (std::size_t i = start; i < stop; ++i) table.rows[i] = batch[i - start].get();
  }
  return table;
}

}  // namespace dce::sweep
