#include "smce/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "smce/errors.hpp"

namespace smce {

using nlohmann::json;

namespace {

void check_shape(const std::vector<WindScenario>& scenarios) {
  if (scenarios.empty()) fail(ErrorKind::Invariant, "scenario set must be nonempty");
  const size_t nt = scenarios.front().trajectory.size();
  if (nt == 0) fail(ErrorKind::Invariant, "scenario trajectories must be nonempty");
  for (size_t w = 0; w < scenarios.size(); ++w) {
    const auto& s = scenarios[w];
    if (s.trajectory.size() != nt)
      fail(ErrorKind::Invariant,
           "scenario " + std::to_string(w + 1) + " trajectory length differs");
    if (s.probability < 0.0)
      fail(ErrorKind::Invariant, "scenario " + std::to_string(w + 1) + " has negative probability");
    for (double v : s.trajectory)
      if (v < 0.0)
        fail(ErrorKind::Invariant,
             "scenario " + std::to_string(w + 1) + " has a negative production value");
  }
}

}  // namespace

ScenarioSet make_scenario_set(std::vector<WindScenario> scenarios, bool normalize) {
  check_shape(scenarios);
  double sum = 0.0;
  for (const auto& s : scenarios) sum += s.probability;
  if (normalize) {
    if (sum <= 0.0) fail(ErrorKind::Invariant, "probabilities sum to zero, cannot normalize");
    for (auto& s : scenarios) s.probability /= sum;
  } else if (std::abs(sum - 1.0) > 1e-9) {
    fail(ErrorKind::Invariant,
         "scenario probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  ScenarioSet set;
  set.scenarios = std::move(scenarios);
  return set;
}

ScenarioSet uncertainty_sweep(const std::vector<double>& forecast, double x_percent,
                              const std::vector<double>& probabilities) {
  if (x_percent < 0.0 || x_percent > 100.0)
    fail(ErrorKind::Invariant, "uncertainty percentage must lie in [0, 100]");
  if (probabilities.size() != 3)
    fail(ErrorKind::Invariant, "uncertainty sweep needs exactly 3 probabilities");
  const double f = x_percent / 100.0;
  WindScenario base{forecast, probabilities[0]};
  WindScenario high{forecast, probabilities[1]};
  WindScenario low{forecast, probabilities[2]};
  for (size_t t = 0; t < forecast.size(); ++t) {
    high.trajectory[t] = forecast[t] * (1.0 + f);
    low.trajectory[t] = forecast[t] * (1.0 - f);
  }
  return make_scenario_set({std::move(base), std::move(high), std::move(low)});
}

std::vector<double> expected_trajectory(const ScenarioSet& set) {
  std::vector<double> mean(static_cast<size_t>(set.horizon()), 0.0);
  for (const auto& s : set.scenarios)
    for (size_t t = 0; t < mean.size(); ++t) mean[t] += s.probability * s.trajectory[t];
  return mean;
}

ScenarioSet reweight_probabilities(const ScenarioSet& set,
                                   const std::vector<double>& probabilities) {
  if (probabilities.size() != set.scenarios.size())
    fail(ErrorKind::Invariant, "probability count differs from scenario count");
  std::vector<WindScenario> scenarios = set.scenarios;
  for (size_t w = 0; w < scenarios.size(); ++w) scenarios[w].probability = probabilities[w];
  return make_scenario_set(std::move(scenarios));
}

ScenarioSet scale_trajectories(const ScenarioSet& set, double factor) {
  if (factor < 0.0) fail(ErrorKind::Invariant, "trajectory scale factor must be >= 0");
  std::vector<WindScenario> scenarios = set.scenarios;
  for (auto& s : scenarios)
    for (auto& v : s.trajectory) v *= factor;
  return make_scenario_set(std::move(scenarios));
}

ScenarioSet load_scenarios_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("scenario document: ") + e.what());
  }
  const json& list = doc.is_array() ? doc : doc.at("scenarios");
  std::vector<WindScenario> scenarios;
  for (const auto& s : list) {
    WindScenario ws;
    ws.probability = s.at("probability").get<double>();
    for (const auto& v : s.at("trajectory")) ws.trajectory.push_back(v.get<double>());
    scenarios.push_back(std::move(ws));
  }
  return make_scenario_set(std::move(scenarios));
}

ScenarioSet load_scenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenarios_json(buf.str());
}

std::string serialize_scenarios(const ScenarioSet& set) {
  json list = json::array();
  for (const auto& s : set.scenarios)
    list.push_back({{"probability", s.probability}, {"trajectory", s.trajectory}});
  return json{{"scenarios", list}}.dump(2);
}

}  // namespace smce
