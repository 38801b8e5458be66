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

#include "fourport/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "fourport/multiport.hpp"

namespace fourport {

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kContinuous: return "continuous";
    case ScenarioKind::kStepwise: return "stepwise";
    case ScenarioKind::kCustom: return "custom";
  }
  return "unknown";
}

void ScenarioConfig::check() const {
  if (sweep_values.empty()) throw std::invalid_argument("scenario: empty sweep grid");
  if (sweep_values.size() != path_schedule.size())
    throw std::invalid_argument("scenario: sweep grid and path schedule differ in length");
  if (!std::is_sorted(sweep_values.begin(), sweep_values.end()))
    throw std::invalid_argument("scenario: sweep grid must be sorted");
  if (!(lambda0 > 0.0) || !(delta_lambda_fwhm > 0.0))
    throw std::invalid_argument("scenario: wavelength and bandwidth must be positive");
  if (phi_samples != 0 && phi_samples < kMinPhiSamples)
    throw std::invalid_argument("scenario: fringe envelopes need at least " +
                                std::to_string(kMinPhiSamples) + " phi samples");
}

ScenarioConfig continuous_config(std::vector<double> y_grid) {
  ScenarioConfig c;
  c.kind = ScenarioKind::kContinuous;
  for (double y : y_grid) c.path_schedule.push_back({0.0, y, -y, 2.0 * y});
  c.sweep_values = std::move(y_grid);
  return c;
}

std::vector<double> default_continuous_grid() {
  std::vector<double> grid;
  for (int y_um = -180; y_um <= 0; ++y_um) grid.push_back(y_um * 1e-6);
  return grid;
}

ScenarioConfig stepwise_config(const StepwiseSchedule& schedule) {
  if (schedule.points_per_leg == 0) throw std::invalid_argument("stepwise: points_per_leg is zero");
  ScenarioConfig c;
  c.kind = ScenarioKind::kStepwise;
  c.alpha = std::numbers::pi;
  c.phi_samples = kMinPhiSamples;

  PathLengths x = schedule.initial;
  double tuned = 0.0;
  c.path_schedule.push_back(x);
  c.sweep_values.push_back(tuned);
  for (std::size_t port : schedule.tuning_order) {
    if (port >= kPorts) throw std::invalid_argument("stepwise: tuning port out of range");
    const double start = x[port];
    const auto steps = static_cast<double>(schedule.points_per_leg);
    for (std::size_t k = 1; k <= schedule.points_per_leg; ++k) {
      const double frac = static_cast<double>(k) / steps;
      x[port] = start * (1.0 - frac);
      c.path_schedule.push_back(x);
      c.sweep_values.push_back(tuned + std::abs(start) * frac);
    }
    x[port] = 0.0;
    c.path_schedule.back() = x;
    tuned += std::abs(start);
  }
  return c;
}

ScenarioConfig custom_config(std::vector<PathLengths> points) {
  ScenarioConfig c;
  c.kind = ScenarioKind::kCustom;
  for (std::size_t i = 0; i < points.size(); ++i) c.sweep_values.push_back(static_cast<double>(i));
  c.path_schedule = std::move(points);
  return c;
}

namespace {

EventEnvelope envelope_for(const ScenarioConfig& config, const FockState& input) {
  EventEnvelope env;
  for (std::size_t m = 0; m < config.phi_samples; ++m) {
    const double offset = 2.0 * std::numbers::pi * static_cast<double>(m) /
                          static_cast<double>(config.phi_samples);
    const auto dist = simulate(input, build_four_port(config.alpha, config.phi + offset).matrix);
    if (m == 0) {
      env.min = env.max = dist.probabilities;
      continue;
    }
    for (std::size_t e = 0; e < dist.size(); ++e) {
      env.min[e] = std::min(env.min[e], dist.probabilities[e]);
      env.max[e] = std::max(env.max[e], dist.probabilities[e]);
    }
  }
  return env;
}

SweepRow evaluate_point(const ScenarioConfig& config, std::size_t i) {
  SweepRow row;
  row.sweep_value = config.sweep_values[i];
  row.path_lengths = config.path_schedule[i];
  const auto spec = wavelength_to_spec(config.lambda0, config.delta_lambda_fwhm, row.path_lengths);
  const auto expansion = gram_schmidt(spec);
  const auto input = build_input_state(expansion, config.terms);
  row.settings = setting_weights(expansion);
  row.probabilities =
      simulate(input, build_four_port(config.alpha, config.phi).matrix).probabilities;
  if (config.phi_samples > 0) row.envelope = envelope_for(config, input);
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioConfig& config) {
  config.check();
  const std::size_t n = config.sweep_values.size();
  std::vector<SweepRow> rows(n);
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) rows[i] = evaluate_point(config, i);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::vector<SweepRow> scenario_continuous(const std::vector<double>& y_grid) {
  return run_sweep(continuous_config(y_grid));
}

std::vector<SweepRow> scenario_stepwise(const StepwiseSchedule& schedule) {
  return run_sweep(stepwise_config(schedule));
}

EventEnvelope fringe_envelope(const ScenarioConfig& config, const PathLengths& point) {
  if (config.phi_samples < kMinPhiSamples)
    throw std::invalid_argument("fringe_envelope: need at least " +
                                std::to_string(kMinPhiSamples) + " phi samples");
  const auto spec = wavelength_to_spec(config.lambda0, config.delta_lambda_fwhm, point);
  return envelope_for(config, build_input_state(gram_schmidt(spec), config.terms));
}

std::size_t event_index(const OccupationVector& event) {
  static const auto order = event_order();
  const auto it = std::find(order.begin(), order.end(), event);
  if (it == order.end()) throw std::out_of_range("event " + event.to_string() + " is not a 4-photon event");
  return static_cast<std::size_t>(it - order.begin());
}

NonmonotonicityReport nonmonotonicity_report(const std::vector<SweepRow>& rows,
                                             const OccupationVector& event) {
  if (rows.size() < 3) throw std::invalid_argument("nonmonotonicity_report: need at least 3 rows");
  const std::size_t e = event_index(event);
  NonmonotonicityReport r;
  r.event = event;
  r.first_value = rows.front().probabilities.at(e);
  r.last_value = rows.back().probabilities.at(e);
  r.max_value = r.first_value;
  r.nonincreasing = r.nondecreasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double p = rows[i].probabilities.at(e);
    if (p > r.max_value) {
      r.max_value = p;
      r.argmax_index = i;
    }
    if (i > 0) {
      const double prev = rows[i - 1].probabilities.at(e);
      if (p > prev + kMonotoneTolerance) r.nonincreasing = false;
      if (p < prev - kMonotoneTolerance) r.nondecreasing = false;
    }
  }
  r.argmax = rows[r.argmax_index].sweep_value;
  r.interior_maximum = r.max_value > r.first_value + kMonotoneTolerance &&
                       r.max_value > r.last_value + kMonotoneTolerance;
  return r;
}

}  // namespace fourport
