#include "dcesim/detection.hpp"

#include <cmath>

#include "dcesim/errors.hpp"

namespace dce::detection {

namespace {
constexpr double kMarginalTolerance = 1e-12;
}

void validate(const DetectionChainSpec& spec) {
  if (!(spec.min_detectable_energy > 0.0)) throw DomainError("detection: minimum detectable energy must be > 0");
  if (!(spec.signal_frequency > 0.0)) throw DomainError("detection: signal frequency must be > 0");
  if (spec.runs < 1) throw DomainError("detection: runs must be >= 1");
  if (!(spec.run_repetition_interval >= 0.0)) throw DomainError("detection: repetition interval must be >= 0");
  if (!(spec.campaign_cap > 0.0)) throw DomainError("detection: campaign cap must be > 0");
}

double single_run_floor(const DetectionChainSpec& spec) {
  validate(spec);
  return spec.min_detectable_energy / (constants::kPlanck * spec.signal_frequency);
}

double sensitivity_photons(const DetectionChainSpec& spec) {
  return single_run_floor(spec) / std::sqrt(static_cast<double>(spec.runs));
}

std::string_view formula_tag(Formula f) {
  switch (f) {
    case Formula::kSingleMirror: return "eq1";
    case Formula::kCavityLinear: return "eq2";
    case Formula::kCavityExponential: return "eq3";
  }
  return "derived";
}

FeasibilityVerdict verdict(const estimator::PhotonYield& yield, const DetectionChainSpec& spec) {
  FeasibilityVerdict out;
  out.sensitivity_photons = sensitivity_photons(spec);
  const std::array<std::pair<Formula, double>, 3> predictions{{
      {Formula::kSingleMirror, yield.n_single_mirror},
      {Formula::kCavityLinear, yield.n_cavity_linear},
      {Formula::kCavityExponential, yield.n_cavity_exponential},
  }};
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto [formula, predicted] = predictions[i];
    if (!(predicted >= 0.0)) throw DomainError("verdict: photon yields must be non-negative");
    FormulaVerdict& v = out.per_formula[i];
    v.formula = formula;
    v.predicted_photons = predicted;
    v.margin = predicted / out.sensitivity_photons;
    v.marginal = std::abs(v.margin - 1.0) <= kMarginalTolerance;
    v.detectable = v.margin >= 1.0 || v.marginal;
  }
  return out;
}

CampaignDuration campaign_duration(const DetectionChainSpec& spec) {
  validate(spec);
  CampaignDuration out;
  out.duration = static_cast<double>(spec.runs) * spec.run_repetition_interval;
  out.exceeds_cap = out.duration > spec.campaign_cap;
  return out;
}

}  // namespace dce::detection
