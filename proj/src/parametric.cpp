#include "dcesim/parametric.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "dcesim/constants.hpp"
#include "dcesim/errors.hpp"
#include "dcesim/units.hpp"

namespace dce::parametric {

using constants::kPi;

namespace {

// Renormalize the state once the energy passes this; the ODE is linear.
constexpr double kRescaleEnergy = 1e100;

struct State {
  double u;
  double v;
};

}  // namespace

double ParametricConfig::drive_period() const { return 2.0 * kPi / drive_angular_frequency; }

double ParametricConfig::analytic_rate() const {
  const double w0 = natural_angular_frequency;
  const double damping = std::isinf(quality_factor) ? 0.0 : w0 / quality_factor;
  return 0.5 * modulation_depth * w0 - damping;
}

bool ParametricConfig::above_threshold() const {
  if (std::isinf(quality_factor)) return modulation_depth > 0.0;
  return modulation_depth > 2.0 / quality_factor;
}

void validate(const ParametricConfig& c) {
  if (!(c.natural_angular_frequency > 0.0) || std::isinf(c.natural_angular_frequency)) {
    throw ConfigError("parametric: natural angular frequency must be finite and > 0");
  }
  if (!(c.modulation_depth >= 0.0 && c.modulation_depth < 1.0)) {
    throw ConfigError("parametric: modulation depth must lie in [0, 1)");
  }
  if (!(c.drive_angular_frequency > 0.0) || std::isinf(c.drive_angular_frequency)) {
    throw ConfigError("parametric: drive angular frequency must be finite and > 0");
  }
  if (!(c.quality_factor > 0.0)) throw ConfigError("parametric: quality factor must be > 0");
  if (!(c.total_time > 0.0) || std::isinf(c.total_time)) {
    throw ConfigError("parametric: total time must be finite and > 0");
  }
  if (c.steps_per_period < kMinStepsPerPeriod) {
    throw ConfigError("parametric: step size too coarse, steps_per_period " +
                      std::to_string(c.steps_per_period) + " < " + std::to_string(kMinStepsPerPeriod));
  }
  if (c.transient_periods < 0) throw ConfigError("parametric: transient periods must be >= 0");
  if (c.drive_phase && !std::isfinite(*c.drive_phase)) {
    throw ConfigError("parametric: drive phase must be finite");
  }
  if (!std::isfinite(c.initial_amplitude) || !std::isfinite(c.initial_velocity)) {
    throw ConfigError("parametric: initial conditions must be finite");
  }
}

EnergyTrace integrate(const ParametricConfig& c) {
  validate(c);
  if (!c.drive_phase) throw ConfigError("parametric: integrate needs a resolved drive phase");

  const double w0 = c.natural_angular_frequency;
  const double w0sq = w0 * w0;
  const double gamma = std::isinf(c.quality_factor) ? 0.0 : w0 / c.quality_factor;
  const double eps = c.modulation_depth;
  const double wd = c.drive_angular_frequency;
  const double phi = *c.drive_phase;
  const double period = c.drive_period();
  const auto periods = static_cast<std::size_t>(std::floor(c.total_time / period));
  const int steps = c.steps_per_period;
  const double dt = period / steps;

  auto rhs = [&](double t, const State& s) {
    const double stiffness = w0sq * (1.0 + eps * std::sin(wd * t + phi));
    return State{s.v, -gamma * s.v - stiffness * s.u};
  };
  auto energy = [&](const State& s) { return 0.5 * s.v * s.v + 0.5 * w0sq * s.u * s.u; };

  EnergyTrace trace;
  trace.reserve(periods + 1);
  State s{c.initial_amplitude, c.initial_velocity};
  double log_scale = 0.0;  // log of the energy factor divided out so far

  auto record = [&](double t) {
    const double e = energy(s);
    const double log_e = std::log(e) + log_scale;
    trace.push_back({t, std::exp(log_e), log_e});
  };
  record(0.0);

  std::size_t n = 0;  // global step index; t = n * dt avoids drift
  for (std::size_t k = 0; k < periods; ++k) {
    for (int i = 0; i < steps; ++i, ++n) {
      const double t = static_cast<double>(n) * dt;
      const State k1 = rhs(t, s);
      const State k2 = rhs(t + 0.5 * dt, {s.u + 0.5 * dt * k1.u, s.v + 0.5 * dt * k1.v});
      const State k3 = rhs(t + 0.5 * dt, {s.u + 0.5 * dt * k2.u, s.v + 0.5 * dt * k2.v});
      const State k4 = rhs(t + dt, {s.u + dt * k3.u, s.v + dt * k3.v});
      s.u += dt / 6.0 * (k1.u + 2.0 * (k2.u + k3.u) + k4.u);
      s.v += dt / 6.0 * (k1.v + 2.0 * (k2.v + k3.v) + k4.v);
    }
    const double e = energy(s);
    if (e > kRescaleEnergy) {
      const double factor = std::sqrt(e);
      s.u /= factor;
      s.v /= factor;
      log_scale += std::log(e);
    }
    record(static_cast<double>(n) * dt);
  }
  return trace;
}

GrowthResult growth_rate(const EnergyTrace& trace, const ParametricConfig& c) {
  const auto skip = static_cast<std::size_t>(c.transient_periods);
  if (trace.size() <= skip || trace.size() - skip < kMinFitPeriods) {
    throw AnalysisError("growth_rate: trace has " + std::to_string(trace.size()) +
                        " samples; need at least " + std::to_string(kMinFitPeriods) +
                        " after skipping " + std::to_string(skip) + " transient periods");
  }
  const std::size_t count = trace.size() - skip;
  double mean_t = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = skip; i < trace.size(); ++i) {
    const TracePoint& p = trace[i];
    if (!(p.energy > 0.0) || !std::isfinite(p.log_energy)) {
      throw AnalysisError("growth_rate: non-positive or non-finite energy at t = " +
                          units::format_number(p.time));
    }
    mean_t += p.time;
    mean_y += p.log_energy;
  }
  mean_t /= static_cast<double>(count);
  mean_y /= static_cast<double>(count);

  double stt = 0.0;
  double sty = 0.0;
  for (std::size_t i = skip; i < trace.size(); ++i) {
    const double dt = trace[i].time - mean_t;
    stt += dt * dt;
    sty += dt * (trace[i].log_energy - mean_y);
  }
  GrowthResult out;
  out.fitted_rate = sty / stt;
  double sse = 0.0;
  for (std::size_t i = skip; i < trace.size(); ++i) {
    const double r = trace[i].log_energy - (mean_y + out.fitted_rate * (trace[i].time - mean_t));
    sse += r * r;
  }
  out.fit_residual = std::sqrt(sse / static_cast<double>(count));
  out.analytic_rate = c.analytic_rate();
  out.above_threshold = c.above_threshold();
  out.fit_points = count;
  return out;
}

double max_gain_phase(const ParametricConfig& config) {
  double best_phase = 0.0;
  double best_log_energy = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kPhaseScanPoints; ++k) {
    ParametricConfig trial = config;
    trial.drive_phase = 2.0 * kPi * k / kPhaseScanPoints;
    const EnergyTrace trace = integrate(trial);
    if (trace.back().log_energy > best_log_energy) {
      best_log_energy = trace.back().log_energy;
      best_phase = *trial.drive_phase;
    }
  }
  return best_phase;
}

SimulationResult simulate(const ParametricConfig& config) {
  validate(config);
  ParametricConfig resolved = config;
  if (!resolved.drive_phase) resolved.drive_phase = max_gain_phase(config);
  SimulationResult out;
  out.drive_phase = *resolved.drive_phase;
  out.trace = integrate(resolved);
  out.growth = growth_rate(out.trace, resolved);
  return out;
}

void write_trace_csv(std::ostream& os, const EnergyTrace& trace) {
  os << "time_s,energy\n";
  for (const TracePoint& p : trace) {
    os << units::format_number(p.time) << ',' << units::format_number(p.energy) << '\n';
  }
}

}  // namespace dce::parametric
