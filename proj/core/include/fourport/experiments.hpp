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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fourport/engine.hpp"
#include "fourport/setting_weights.hpp"
#include "fourport/wavepacket.hpp"

namespace fourport {

enum class ScenarioKind { kContinuous, kStepwise, kCustom };

std::string_view to_string(ScenarioKind kind);

using PathLengths = std::array<double, kPorts>;  // meters

/// A sweep over interferometer path lengths at fixed source and multiport
/// parameters. All lengths are SI.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::kCustom;
  double lambda0 = 780e-9;
  double delta_lambda_fwhm = 5e-9;
  double alpha = 0.0;
  double phi = 0.0;
  std::vector<double> sweep_values;         // sorted, one per schedule entry
  std::vector<PathLengths> path_schedule;   // x1..x4 at each sweep value
  std::size_t phi_samples = 0;              // 0 disables fringe envelopes
  InputTerms terms = InputTerms::kFull;
  unsigned threads = 0;                     // 0 = hardware concurrency

  /// Throws std::invalid_argument on an empty, unsorted or mismatched grid.
  void check() const;
};

/// Minimum phi samples accepted when envelopes are requested.
inline constexpr std::size_t kMinPhiSamples = 64;

/// Continuous transition: x = (0, y, -y, 2y). Because x1 + x2 - x3 - x4 = 0
/// along this line the fast phase stays fixed and only the coherence-length
/// scale shows up. Defaults alpha = phi = 0.
ScenarioConfig continuous_config(std::vector<double> y_grid);

/// y from -180 um to 0 in 1 um steps (181 points).
std::vector<double> default_continuous_grid();

/// Step-wise transition: starting from `initial`, the ports listed in
/// `tuning_order` (0-based) are driven linearly to zero one after the other.
/// Each leg contributes `points_per_leg` points ending at the leg's end,
/// after a leading point at `initial`; the sweep value is the cumulative
/// length tuned so far.
struct StepwiseSchedule {
  PathLengths initial{0.0, 220e-6, 440e-6, 660e-6};
  std::vector<std::size_t> tuning_order{1, 2, 3};
  std::size_t points_per_leg = 60;
};

/// Defaults alpha = pi, phi = 0, 64 phi samples.
ScenarioConfig stepwise_config(const StepwiseSchedule& schedule = {});

/// Explicit list of path-length points; sweep values are the point indices.
ScenarioConfig custom_config(std::vector<PathLengths> points);

struct EventEnvelope {
  std::vector<double> min;
  std::vector<double> max;
};

struct SweepRow {
  double sweep_value = 0.0;
  PathLengths path_lengths{};
  std::vector<double> probabilities;  // event_order() order, at the configured phi
  SettingWeights settings;
  std::optional<EventEnvelope> envelope;
};

/// Evaluates every grid point, in parallel when threads allow. Row order
/// follows the grid.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config);

std::vector<SweepRow> scenario_continuous(const std::vector<double>& y_grid);
std::vector<SweepRow> scenario_stepwise(const StepwiseSchedule& schedule = {});

/// Per-event min and max over phi offsets 2 pi m / phi_samples, m = 0..M-1,
/// at fixed path lengths. Throws std::invalid_argument when
/// config.phi_samples < kMinPhiSamples.
EventEnvelope fringe_envelope(const ScenarioConfig& config, const PathLengths& point);

struct NonmonotonicityReport {
  OccupationVector event;
  double max_value = 0.0;
  std::size_t argmax_index = 0;
  double argmax = 0.0;  // sweep value at the maximum
  double first_value = 0.0;
  double last_value = 0.0;
  bool interior_maximum = false;  // max strictly above both endpoints
  bool nonincreasing = false;
  bool nondecreasing = false;
};

inline constexpr double kMonotoneTolerance = 1e-12;

/// Throws std::invalid_argument for fewer than three rows.
NonmonotonicityReport nonmonotonicity_report(const std::vector<SweepRow>& rows,
                                             const OccupationVector& event);

/// Position of an event in event_order(); throws std::out_of_range.
std::size_t event_index(const OccupationVector& event);

/// Rejected scenario file; `where` is a JSON pointer to the bad field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Parses the JSON scenario format:
///
///   {
///     "scenario": "continuous" | "stepwise" | "custom",
///     "lambda0_nm": 780, "delta_lambda_fwhm_nm": 5,
///     "alpha_rad": 0, "phi_rad": 0, "phi_samples": 64,
///     "terms": "full" | "quadruplet",
///     "grid": {...}
///   }
///
/// Grid keys: continuous takes y_start_um, y_stop_um, y_step_um; stepwise
/// takes initial_um (4 values), points_per_leg, tuning_order (1-based
/// ports); custom takes points_um, a list of 4-value lists. Omitted keys
/// fall back to the defaults of the corresponding *_config function.
ScenarioConfig parse_scenario_config(std::string_view json_text);

}  // namespace fourport
