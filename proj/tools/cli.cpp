#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "dcesim/cavity.hpp"
#include "dcesim/config.hpp"
#include "dcesim/errors.hpp"
#include "dcesim/parametric.hpp"
#include "dcesim/plasma_mirror.hpp"
#include "dcesim/report.hpp"
#include "dcesim/simulation.hpp"
#include "dcesim/sweep.hpp"
#include "dcesim/units.hpp"

namespace dce::cli {

namespace {

struct Common {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, Common& c, bool config_required) {
  auto* opt = cmd->add_option("--config", c.config_path, "Experiment config (JSON with unit-suffixed quantities)");
  if (config_required) opt->required();
  cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "structured"}));
  cmd->add_option("--override", c.overrides, "Set a config field, key=value (sim.* keys tune the simulator)");
}

std::pair<std::string, std::string> split_override(const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + item + "' is not of the form key=value");
  return {item.substr(0, eq), item.substr(eq + 1)};
}

// Loads the config and applies --override items; sim.* items go to `sim`.
config::ExperimentConfig load(const Common& c, simulation::SimOptions* sim) {
  config::ExperimentConfig cfg = config::load_config_file(c.config_path);
  for (const std::string& item : c.overrides) {
    const auto [key, value] = split_override(item);
    if (key.rfind("sim.", 0) == 0) {
      if (!sim) throw ConfigError("simulation option '" + key + "' is only valid for simulate and sweep");
      simulation::apply_option(*sim, key.substr(4), value);
    } else {
      cfg = config::with_override(cfg, key, value);
    }
  }
  return cfg;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + c.out_path + "'");
  file << text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamic Casimir effect feasibility simulator", "dcesim"};
  app.require_subcommand(1);

  Common eig_opts;
  std::string width, height, length, mode_text = "TE101";
  auto* eig = app.add_subcommand("eigenfreq", "Cavity mode frequency and parametric drive frequency");
  add_common(eig, eig_opts, false);
  eig->add_option("--width", width, "Cavity width a, e.g. '71 mm'");
  eig->add_option("--height", height, "Cavity height b");
  eig->add_option("--length", length, "Cavity length d");
  eig->add_option("--mode", mode_text, "Mode, e.g. TE101");

  Common report_opts;
  auto* rep = app.add_subcommand("report", "Full feasibility report");
  add_common(rep, report_opts, true);

  Common validate_opts;
  auto* val = app.add_subcommand("validate", "Load a config and list its cross-link checks");
  add_common(val, validate_opts, true);

  Common sweep_opts;
  std::string param, min_text, max_text, spacing = "linear", columns;
  int count = 0;
  auto* swp = app.add_subcommand("sweep", "Sweep one config parameter");
  add_common(swp, sweep_opts, true);
  swp->add_option("--param", param, "Dotted config path, e.g. pulse_train.pulse_count")->required();
  swp->add_option("--min", min_text, "Lower end, with units")->required();
  swp->add_option("--max", max_text, "Upper end, with units")->required();
  swp->add_option("--count", count, "Number of points (>= 2)")->required();
  swp->add_option("--spacing", spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}));
  swp->add_option("--columns", columns, "Comma-separated output columns");

  Common sim_opts;
  std::string trace_path;
  auto* sim = app.add_subcommand("simulate", "Parametric-oscillator cross-check of the exponential regime");
  add_common(sim, sim_opts, true);
  sim->add_option("--trace", trace_path, "Energy trace CSV (time, energy)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (*eig) {
      cavity::CavityGeometry geom;
      cavity::ModeIndex mode;
      if (!eig_opts.config_path.empty()) {
        const auto cfg = load(eig_opts, nullptr);
        geom = cfg.cavity.geometry;
        mode = cfg.cavity.mode;
      } else {
        if (width.empty() || height.empty() || length.empty()) {
          throw ConfigError("eigenfreq needs --config or all of --width, --height, --length");
        }
        geom.width_a = units::parse_quantity(width, units::Dimension::kLength);
        geom.height_b = units::parse_quantity(height, units::Dimension::kLength);
        geom.length_d = units::parse_quantity(length, units::Dimension::kLength);
        mode = cavity::parse_mode(mode_text);
      }
      const double f = cavity::eigenfrequency(geom, mode);
      const double drive = plasma::parametric_drive_frequency(f);
      std::string text;
      if (eig_opts.format == "csv") {
        text = "quantity,value,unit\nmode," + cavity::to_string(mode) + ",\neigenfrequency," +
               units::format_number(f) + ",Hz\nparametric_drive_frequency," + units::format_number(drive) + ",Hz\n";
      } else {
        text = "{\n  \"mode\": \"" + cavity::to_string(mode) + "\",\n  \"eigenfrequency\": " +
               units::format_number(f) + ",\n  \"parametric_drive_frequency\": " + units::format_number(drive) +
               "\n}\n";
      }
      emit(eig_opts, text, out);
    } else if (*rep) {
      const auto report = report::build_report(load(report_opts, nullptr));
      emit(report_opts,
           report_opts.format == "csv" ? report::render_csv(report) : report::render_structured(report), out);
    } else if (*val) {
      const auto cfg = load(validate_opts, nullptr);
      const auto resolved = config::resolve(cfg);
      if (validate_opts.format == "csv") {
        std::string text = "field,status,value,expected,rule\n";
        for (const auto& link : resolved.links) {
          text += link.field + "," + std::string(config::to_string(link.status)) + "," +
                  units::format_number(link.value) + "," + units::format_number(link.expected) + "," + link.rule +
                  "\n";
        }
        emit(validate_opts, text, out);
      } else {
        emit(validate_opts, config::serialize(cfg), out);
      }
    } else if (*swp) {
      sweep::SweepSpec spec;
      const auto cfg = load(sweep_opts, &spec.sim);
      spec.path = param;
      spec.min = sweep::parse_endpoint(param, min_text);
      spec.max = sweep::parse_endpoint(param, max_text);
      spec.count = count;
      spec.spacing = spacing == "log" ? sweep::Spacing::kLog : sweep::Spacing::kLinear;
      spec.columns = split_list(columns);
      const auto table = sweep::run(cfg, spec);
      emit(sweep_opts, sweep_opts.format == "csv" ? table.render_csv() : table.render_structured(), out);
      const std::size_t errors = table.error_rows();
      if (errors == table.rows.size()) {
        err << "sweep: every point failed validation\n";
        return kValidationError;
      }
      if (errors > 0) {
        err << "sweep: " << errors << " of " << table.rows.size() << " points failed\n";
        return kPartialSweep;
      }
    } else if (*sim) {
      simulation::SimOptions options;
      const auto cfg = load(sim_opts, &options);
      const auto result = simulation::simulate(cfg, options);
      if (!trace_path.empty()) {
        std::ofstream trace(trace_path, std::ios::binary);
        if (!trace) throw ConfigError("cannot write '" + trace_path + "'");
        parametric::write_trace_csv(trace, result.result.trace);
      }
      emit(sim_opts,
           sim_opts.format == "csv" ? simulation::render_summary_csv(result)
                                    : simulation::render_summary_structured(result),
           out);
    }
  } catch (const AnalysisError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kOk;
}

}  // namespace dce::cli
