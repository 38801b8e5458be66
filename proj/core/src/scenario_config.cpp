// Copyright 2026 The fourport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "fourport/experiments.hpp"

namespace fourport {

namespace {

using nlohmann::json;

double number(const json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "/" + key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(where + "/" + key, "must be finite");
  return d;
}

std::size_t count(const json& obj, const char* key, std::size_t fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned()) throw ConfigError(where + "/" + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

PathLengths lengths_um(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != kPorts)
    throw ConfigError(where, "expected an array of 4 path lengths in micrometers");
  PathLengths x{};
  for (std::size_t j = 0; j < kPorts; ++j) {
    if (!v[j].is_number()) throw ConfigError(where + "/" + std::to_string(j), "expected a number");
    x[j] = v[j].get<double>() * 1e-6;
  }
  return x;
}

}  // namespace

ScenarioConfig parse_scenario_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("", "top level must be an object");
  if (!root.contains("scenario") || !root["scenario"].is_string())
    throw ConfigError("/scenario", "missing or not a string");

  const std::string kind = root["scenario"].get<std::string>();
  const json grid = root.contains("grid") ? root["grid"] : json::object();
  if (!grid.is_object()) throw ConfigError("/grid", "expected an object");

  ScenarioConfig config;
  if (kind == "continuous") {
    const double start = number(grid, "y_start_um", -180.0, "/grid");
    const double stop = number(grid, "y_stop_um", 0.0, "/grid");
    const double step = number(grid, "y_step_um", 1.0, "/grid");
    if (!(step > 0.0)) throw ConfigError("/grid/y_step_um", "must be positive");
    if (stop < start) throw ConfigError("/grid/y_stop_um", "must not be below y_start_um");
    const auto points = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> ys;
    for (std::size_t i = 0; i < points; ++i) ys.push_back((start + static_cast<double>(i) * step) * 1e-6);
    config = continuous_config(std::move(ys));
  } else if (kind == "stepwise") {
    StepwiseSchedule schedule;
    if (grid.contains("initial_um")) schedule.initial = lengths_um(grid["initial_um"], "/grid/initial_um");
    schedule.points_per_leg = count(grid, "points_per_leg", schedule.points_per_leg, "/grid");
    if (schedule.points_per_leg == 0) throw ConfigError("/grid/points_per_leg", "must be positive");
    if (grid.contains("tuning_order")) {
      const auto& order = grid["tuning_order"];
      if (!order.is_array()) throw ConfigError("/grid/tuning_order", "expected an array of ports 1..4");
      schedule.tuning_order.clear();
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (!order[i].is_number_unsigned() || order[i].get<std::size_t>() < 1 ||
            order[i].get<std::size_t>() > kPorts)
          throw ConfigError("/grid/tuning_order/" + std::to_string(i), "port must be 1..4");
        schedule.tuning_order.push_back(order[i].get<std::size_t>() - 1);
      }
    }
    config = stepwise_config(schedule);
  } else if (kind == "custom") {
    if (!grid.contains("points_um") || !grid["points_um"].is_array() || grid["points_um"].empty())
      throw ConfigError("/grid/points_um", "custom scenario needs a non-empty list of points");
    std::vector<PathLengths> points;
    const auto& list = grid["points_um"];
    for (std::size_t i = 0; i < list.size(); ++i)
      points.push_back(lengths_um(list[i], "/grid/points_um/" + std::to_string(i)));
    config = custom_config(std::move(points));
  } else {
    throw ConfigError("/scenario", "unknown scenario '" + kind + "'");
  }

  config.lambda0 = number(root, "lambda0_nm", config.lambda0 * 1e9, "") * 1e-9;
  config.delta_lambda_fwhm =
      number(root, "delta_lambda_fwhm_nm", config.delta_lambda_fwhm * 1e9, "") * 1e-9;
  config.alpha = number(root, "alpha_rad", config.alpha, "");
  config.phi = number(root, "phi_rad", config.phi, "");
  config.phi_samples = count(root, "phi_samples", config.phi_samples, "");
  if (root.contains("terms")) {
    const auto& t = root["terms"];
    if (t == "full") config.terms = InputTerms::kFull;
    else if (t == "quadruplet") config.terms = InputTerms::kQuadrupletOnly;
    else throw ConfigError("/terms", "expected \"full\" or \"quadruplet\"");
  }
  if (!(config.lambda0 > 0.0)) throw ConfigError("/lambda0_nm", "must be positive");
  if (!(config.delta_lambda_fwhm > 0.0)) throw ConfigError("/delta_lambda_fwhm_nm", "must be positive");
  if (config.phi_samples != 0 && config.phi_samples < kMinPhiSamples)
    throw ConfigError("/phi_samples", "must be 0 or at least " + std::to_string(kMinPhiSamples));
  return config;
}

}  // namespace fourport
