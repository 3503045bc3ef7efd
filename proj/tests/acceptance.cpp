// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dcesim/cavity.hpp"
#include "dcesim/config.hpp"
#include "dcesim/constants.hpp"
#include "dcesim/detection.hpp"
#include "dcesim/estimator.hpp"
#include "dcesim/parametric.hpp"
#include "dcesim/plasma_mirror.hpp"
#include "dcesim/report.hpp"
#include "dcesim/simulation.hpp"

using namespace dce;

namespace {

const std::string kBaseline = std::string(DCESIM_SOURCE_DIR) + "/configs/paper-baseline.json";

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Collects failed checks with a readable reason.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void within(double value, double lo, double hi, const std::string& what) {
    expect(value >= lo && value <= hi, what + " = " + std::to_string(value) + " outside [" + std::to_string(lo) +
                                           ", " + std::to_string(hi) + "]");
  }
  void close(double value, double expected, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << value << ", expected " << expected << " (rel tol " << tol << ")";
    expect(rel(value, expected) <= tol, os.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // s, 0 = none
  std::function<void(Checks&)> body;
};

void golden_number(Checks& c) {
  const report::Report rep = report::build_report(config::load_config_file(kBaseline));
  const double n = rep.number("n_cavity_linear");
  c.close(n, 4.5e4, 1e-12, "n_cavity_linear");
  // Linear cavity yield by hand: w t / (2 pi) (v/c)^2 Q with w = 2 pi 2.5 GHz, t = 1 us.
  const double by_hand = (2.0 * constants::kPi * 2.5e9 * 1e-6) / (2.0 * constants::kPi) * 9e-6 * 2e6;
  c.close(n, by_hand, 1e-12, "n_cavity_linear vs hand evaluation");
  c.within(n / 4e4, 0.85, 1.15, "n_cavity_linear / rounded reference 4e4");
  c.expect(rep.flag("detectable"), "baseline should be detectable");
}

void mechanical_infeasibility(Checks& c) {
  estimator::VibratingWallSpec wall;
  wall.mass_density = 3e3;
  wall.volume = 9e-8;
  wall.angular_frequency = 2.0 * constants::kPi * 2e9;
  wall.amplitude = 1e-9;
  const double p = estimator::vibrating_wall_power(wall).power;
  c.within(p / 3e8, 0.5, 2.0, "wall power / 3e8 W");
}

void mode_consistency(Checks& c) {
  const cavity::CavityGeometry geom{0.071, 0.022, 0.110, 2e6};
  const double f = cavity::eigenfrequency(geom, cavity::parse_mode("TE101"));
  c.close(f, 2.513e9, 0.01, "TE101 eigenfrequency");
  c.close(f, 2512799001.66081693619, 1e-12, "TE101 eigenfrequency vs oracle");
  c.expect(plasma::parametric_drive_frequency(f) == 2.0 * f, "drive frequency must be exactly 2f");
}

void detector_floor(Checks& c) {
  detection::DetectionChainSpec spec;
  spec.min_detectable_energy = 0.1 * constants::kElectronVolt;
  spec.signal_frequency = 2.5e9;
  spec.runs = 1;
  c.within(detection::sensitivity_photons(spec), 9e3, 1.05e4, "sensitivity, 1 run");
  spec.runs = 100;
  c.within(detection::sensitivity_photons(spec), 9e2, 1.05e3, "sensitivity, 100 runs");
}

void pulse_train(Checks& c) {
  plasma::PlasmaMirrorSpec spec;
  spec.wafer_thickness = 0.6e-3;
  spec.recombination_time = 10e-12;
  spec.laser_rise_time = 1e-12;
  spec.areal_pulse_energy = 1e-2;
  spec.illuminated_area = 0.071 * 0.022;
  spec.microwave_frequency = 2.5e9;
  spec.plasma_conductivity = 1e4;
  const auto lo = plasma::laser_budget(spec, {5e9, 1000});
  const auto hi = plasma::laser_budget(spec, {5e9, 10000});
  c.expect(lo.duration == 2e-7, "1000 pulses at 5 GHz should take exactly 0.2 us, got " + std::to_string(lo.duration));
  c.expect(hi.duration == 2e-6, "10000 pulses at 5 GHz should take exactly 2 us, got " + std::to_string(hi.duration));
}

void single_mirror(Checks& c) {
  estimator::MirrorMotionSpec spec;
  spec.angular_frequency = 1e10;
  spec.duration = 1.0;
  spec.stroke = 1e-3;
  spec.cavity_length = 0.1;
  spec.quality_factor = 1.0;
  spec.velocity_ratio_override = 1e-8;
  const double n = estimator::photon_yield(spec).n_single_mirror;
  c.close(n, 1e10 * 1.0 / (3.0 * constants::kPi) * 1e-16, 1e-12, "eq1 vs direct evaluation");
  c.close(n, 1.06103295394596890e-7, 1e-12, "eq1 vs oracle");
  c.within(n, 1.05e-7, 1.07e-7, "eq1 single mirror");
  detection::DetectionChainSpec det;
  det.signal_frequency = 2.5e9;
  c.expect(n < detection::sensitivity_photons(det), "single mirror yield must be below the detection floor");
}

void property_suite(Checks& c) {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, unit(rng)); };
  int ratio_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    estimator::MirrorMotionSpec spec;
    spec.angular_frequency = log_uniform(1e6, 1e12);
    spec.duration = log_uniform(1e-9, 10.0);
    spec.cavity_length = log_uniform(1e-3, 1.0);
    spec.stroke = spec.cavity_length * log_uniform(1e-9, 0.1);
    spec.quality_factor = log_uniform(1.0, 1e10);
    const auto y = estimator::photon_yield(spec);
    if (rel(y.n_cavity_linear / y.n_single_mirror, 1.5 * spec.quality_factor) > 1e-12) ++ratio_failures;
  }
  c.expect(ratio_failures == 0, std::to_string(ratio_failures) + " of 1000 specs break eq2/eq1 = 3Q/2");

  double worst_sinh = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = log_uniform(1e-12, 1e-3);
    worst_sinh = std::max(worst_sinh, rel(estimator::sinh_squared(x).value, x * x));
  }
  c.expect(worst_sinh <= 1e-5, "sinh^2 small-argument deviation " + std::to_string(worst_sinh));

  double worst_scale = 0.0;
  double worst_skin = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const cavity::CavityGeometry g{log_uniform(1e-3, 1.0), log_uniform(1e-3, 1.0), log_uniform(1e-3, 1.0), 1e4};
    const double s = log_uniform(0.1, 10.0);
    const cavity::CavityGeometry scaled{g.width_a * s, g.height_b * s, g.length_d * s, 1e4};
    const cavity::ModeIndex mode{cavity::ModeFamily::kTE, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                                 1 + static_cast<int>(rng() % 3)};
    worst_scale = std::max(worst_scale, rel(cavity::eigenfrequency(scaled, mode) * s, cavity::eigenfrequency(g, mode)));

    const double sigma = log_uniform(1.0, 1e8);
    const double f = log_uniform(1e6, 1e12);
    const double k = log_uniform(0.1, 10.0);
    worst_skin = std::max(worst_skin, rel(cavity::skin_depth(sigma, f * k) * std::sqrt(k), cavity::skin_depth(sigma, f)));
  }
  c.expect(worst_scale <= 1e-12, "eigenfrequency scaling deviation " + std::to_string(worst_scale));
  c.expect(worst_skin <= 1e-12, "skin depth sqrt(f) deviation " + std::to_string(worst_skin));
}

parametric::ParametricConfig oscillator(double eps, double q, double total_time, int steps) {
  parametric::ParametricConfig cfg;
  cfg.modulation_depth = eps;
  cfg.quality_factor = q;
  cfg.total_time = total_time;
  cfg.steps_per_period = steps;
  return cfg;
}

void parametric_oracle(Checks& c) {
  // Energy conservation without drive or loss.
  {
    auto cfg = oscillator(0.0, parametric::kUndamped, 0.0, 256);
    cfg.total_time = 1e4 * cfg.drive_period();
    cfg.drive_phase = 0.0;
    const auto trace = parametric::integrate(cfg);
    double drift = 0.0;
    for (const auto& p : trace) drift = std::max(drift, rel(p.energy, trace.front().energy));
    c.expect(trace.size() == 10001, "drift trace should hold 1e4 periods");
    c.expect(drift <= 1e-6, "undamped energy drift " + std::to_string(drift));
  }

  // 5 x 5 grid of (eps, Q) against eps w0/2 - w0/Q.
  const double eps_grid[] = {0.002, 0.005, 0.01, 0.02, 0.05};
  const double q_grid[] = {3e3, 1e4, 3e4, 1e5, parametric::kUndamped};
  double worst = 0.0;
  for (double eps : eps_grid) {
    for (double q : q_grid) {
      auto cfg = oscillator(eps, q, 0.0, 128);
      const double rate = cfg.analytic_rate();
      cfg.total_time = 10.0 / std::abs(rate) + 60.0 * cfg.drive_period();
      const auto r = parametric::simulate(cfg);
      const double dev = rel(r.growth.fitted_rate, rate);
      worst = std::max(worst, dev);
      if (dev > 0.05) {
        c.expect(false, "grid point eps=" + std::to_string(eps) + " Q=" + std::to_string(q) +
                            " deviates by " + std::to_string(dev));
      }
    }
  }
  std::printf("    grid worst relative deviation: %.3g\n", worst);

  // Bridge: eps = 4 v/c, Q = inf, against the sinh^2 exponent 2 w (v/c).
  {
    simulation::SimOptions options;
    options.quality_factor = parametric::kUndamped;
    const auto sim = simulation::simulate(config::load_config_file(kBaseline), options);
    c.expect(sim.deviation_from_eq3 <= 0.05, "bridge deviation from eq3 exponent " +
                                                 std::to_string(sim.deviation_from_eq3));
  }

  // Threshold sign: rate > 0 for eps > 2/Q, < 0 for eps < 2/Q.
  for (double q : {1e3, 1e4}) {
    for (double factor : {0.5, 2.0}) {
      auto cfg = oscillator(factor * 2.0 / q, q, 0.0, 128);
      cfg.total_time = 10.0 / std::abs(cfg.analytic_rate()) + 60.0 * cfg.drive_period();
      const auto r = parametric::simulate(cfg);
      const bool grows = r.growth.fitted_rate > 0.0;
      c.expect(grows == cfg.above_threshold() && grows == (factor > 1.0),
               "threshold sign wrong at Q=" + std::to_string(q) + " eps/(2/Q)=" + std::to_string(factor));
    }
  }
}

void determinism(Checks& c) {
  auto capture = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const std::vector<std::string> report_args = {"report", "--config", kBaseline};
  const std::vector<std::string> report_json = {"report", "--config", kBaseline, "--format", "structured"};
  const std::vector<std::string> sweep_args = {"sweep",   "--config", kBaseline, "--param", "pulse_train.detuning",
                                               "--min",   "-0.01",    "--max",   "0.01",    "--count",
                                               "5",       "--columns", "n_cavity_linear,growth_rate"};
  for (const auto& args : {report_args, report_json, sweep_args}) {
    const std::string a = capture(args);
    const std::string b = capture(args);
    c.expect(a.rfind("0\n", 0) == 0, args[0] + " did not exit cleanly");
    c.expect(a == b, args[0] + " output differs between runs");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden feasibility number (n_cavity_linear = 4.5e4)", 1.0, golden_number},
      {2, "mechanical wall power within 2x of 3e8 W", 1.0, mechanical_infeasibility},
      {3, "TE101 eigenfrequency 2.513 GHz and 2f drive", 0.0, mode_consistency},
      {4, "detector floor 1e4 / 1e3 photons", 0.0, detector_floor},
      {5, "pulse train 0.2 us / 2 us", 0.0, pulse_train},
      {6, "single-mirror yield 1.06e-7", 0.0, single_mirror},
      {7, "property suite", 0.0, property_suite},
      {8, "parametric-sim oracle", 60.0, parametric_oracle},
      {9, "report and sweep determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.time_limit > 0.0) {
      checks.expect(elapsed < cr.time_limit,
                    "runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(cr.time_limit) + " s");
    }
    const bool ok = checks.failures().empty();
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, elapsed);
    for (const auto& f : checks.failures()) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
