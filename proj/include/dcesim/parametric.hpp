#pragma once

// Classical single-mode analogue of parametric amplification:
//
//   u'' + (w0/Q) u' + w0^2 (1 + eps sin(wd t + phi)) u = 0
//
// integrated with fixed-step RK4. Energy E = u'^2/2 + w0^2 u^2/2 is sampled
// once per drive period and its exponential rate is fitted.

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

namespace dce::parametric {

inline constexpr int kMinStepsPerPeriod = 64;
inline constexpr int kDefaultTransientPeriods = 10;
inline constexpr std::size_t kMinFitPeriods = 50;
inline constexpr int kPhaseScanPoints = 8;

/// Modulation depth that makes the maximal energy growth rate eps*w0/2 equal
/// the sinh^2 exponent 2*w*(v/c) of the exponential photon-number formula.
inline constexpr double kBridgeFactor = 4.0;
inline double modulation_depth_for(double velocity_ratio) { return kBridgeFactor * velocity_ratio; }

inline constexpr double kUndamped = std::numeric_limits<double>::infinity();

struct ParametricConfig {
  double natural_angular_frequency = 1.0;  // w0, rad/s
  double modulation_depth = 0.0;           // eps in [0, 1)
  double drive_angular_frequency = 2.0;    // wd, rad/s
  std::optional<double> drive_phase;       // rad; unset = scan for maximal gain
  double quality_factor = kUndamped;       // +inf disables damping
  double initial_amplitude = 1.0;
  double initial_velocity = 0.0;
  double total_time = 0.0;                 // s
  int steps_per_period = 256;              // RK4 steps per drive period
  int transient_periods = kDefaultTransientPeriods;

  double drive_period() const;
  /// Analytic energy rate at exact resonance: eps*w0/2 - w0/Q.
  double analytic_rate() const;
  /// eps > 2/Q.
  bool above_threshold() const;
};

/// Throws ConfigError when an invariant is violated.
void validate(const ParametricConfig& config);

struct TracePoint {
  double time = 0.0;
  double energy = 0.0;      // may be +inf when only log_energy is representable
  double log_energy = 0.0;  // natural log of energy
};

using EnergyTrace = std::vector<TracePoint>;

/// Integrates over floor(total_time / drive_period) drive periods and returns
/// one sample per period boundary, starting at t = 0. Requires a resolved
/// drive phase.
EnergyTrace integrate(const ParametricConfig& config);

struct GrowthResult {
  double fitted_rate = 0.0;   // 1/s, slope of log E over the fit window
  double fit_residual = 0.0;  // RMS residual of log E
  double analytic_rate = 0.0; // 1/s
  bool above_threshold = false;
  std::size_t fit_points = 0;
};

/// Least-squares slope of log E(t) after skipping the configured transient.
/// Throws AnalysisError if fewer than kMinFitPeriods samples remain and
/// AnalysisError for non-positive or non-finite energies.
GrowthResult growth_rate(const EnergyTrace& trace, const ParametricConfig& config);

/// Drive phase giving the largest final energy among kPhaseScanPoints
/// equally spaced candidates in [0, 2pi).
double max_gain_phase(const ParametricConfig& config);

struct SimulationResult {
  double drive_phase = 0.0;
  EnergyTrace trace;
  GrowthResult growth;
};

/// Resolves the phase (scanning if unset), integrates and fits.
SimulationResult simulate(const ParametricConfig& config);

/// Two-column CSV: "time_s,energy" header then one row per sample.
void write_trace_csv(std::ostream& os, const EnergyTrace& trace);

}  // namespace dce::parametric
