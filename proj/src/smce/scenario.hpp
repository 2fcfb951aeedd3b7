#pragma once

// Wind-production scenario sets: probability-weighted trajectories plus the
// (1 +/- x%) sweep construction used by the uncertainty experiments.

#include <string>
#include <vector>

namespace smce {

struct WindScenario {
  std::vector<double> trajectory;  // MW per period
  double probability = 0.0;
};

struct ScenarioSet {
  std::vector<WindScenario> scenarios;

  int count() const { return static_cast<int>(scenarios.size()); }
  int horizon() const {
    return scenarios.empty() ? 0 : static_cast<int>(scenarios.front().trajectory.size());
  }
};

/// Builds a set from raw scenarios. Probabilities must be nonnegative and sum
/// to 1 within 1e-9 unless `normalize` is set, in which case they are rescaled
/// exactly.
ScenarioSet make_scenario_set(std::vector<WindScenario> scenarios, bool normalize = false);

/// Three scenarios {forecast, forecast*(1+x/100), forecast*(1-x/100)} with the
/// given probabilities (forecast, high, low). x must lie in [0, 100].
ScenarioSet uncertainty_sweep(const std::vector<double>& forecast, double x_percent,
                              const std::vector<double>& probabilities);

/// Per-period probability-weighted mean trajectory.
std::vector<double> expected_trajectory(const ScenarioSet& set);

/// Replaces the probabilities of an existing set (the second uncertainty knob:
/// reweighting instead of trajectory scaling).
ScenarioSet reweight_probabilities(const ScenarioSet& set, const std::vector<double>& probabilities);

/// Scales every trajectory by a positive factor (penetration studies).
ScenarioSet scale_trajectories(const ScenarioSet& set, double factor);

ScenarioSet load_scenarios(const std::string& path);
ScenarioSet load_scenarios_json(const std::string& json_text);
std::string serialize_scenarios(const ScenarioSet& set);

}  // namespace smce
