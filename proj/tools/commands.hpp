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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fourport/experiments.hpp"
#include "output_table.hpp"

namespace fourport::cli {

// Normalization tolerance applied to every emitted distribution.
inline constexpr double kNormTolerance = 1e-10;
// Required agreement between engine and closed forms in table1.
inline constexpr double kClosedFormTolerance = 1e-10;

struct CommandResult {
  OutputTable table;
  bool ok = true;
  std::vector<std::string> diagnostics;

  void fail(std::string why) {
    ok = false;
    diagnostics.push_back(std::move(why));
  }
};

/// The five tabulated events: distinguishable value, closed form and engine
/// result with all photons coincident.
CommandResult cmd_table1(double alpha, double phi);

/// All 35 events: distinguishable probabilities and the fully
/// indistinguishable engine result at (phi, alpha) = (0, 0), (0, pi/4), (pi/4, 0).
CommandResult cmd_figure2();

struct PointOptions {
  double lambda0_nm = 780.0;
  double dlambda_nm = 5.0;
  double alpha = 0.0;
  double phi = 0.0;
  std::array<double, 4> x_um{};                  // used unless times_fs is set
  std::optional<std::array<double, 4>> times_fs;  // arrival times in femtoseconds
  std::optional<std::filesystem::path> unitary;  // replaces U(alpha, phi)
  bool quadruplet_only = false;
};

/// One configuration: 35 probabilities with their distinguishable
/// reference, setting weights and normalization residual in the metadata.
CommandResult cmd_probabilities(const PointOptions& options);

/// Sweep table in event order: sweep value, path lengths, P_k, optional
/// Pmin_k/Pmax_k, and one W_ column per setting pattern.
OutputTable sweep_table(const ScenarioConfig& config, const std::vector<SweepRow>& rows);

struct SweepOptions {
  bool emit_plot_script = false;
  unsigned threads = 0;
  std::optional<std::size_t> phi_samples;  // overrides the config file
};

/// Runs the scenario in `config_path` and writes CSV to `out_path`.
/// Throws ConfigError for a bad scenario file and std::runtime_error when
/// the output cannot be written.
CommandResult cmd_sweep(const std::filesystem::path& config_path,
                        const std::filesystem::path& out_path, const SweepOptions& options = {});

CommandResult cmd_validate_unitary(const std::filesystem::path& path);

/// Parses SIM_THREADS; unset, empty or 0 means automatic.
unsigned threads_from_env();

}  // namespace fourport::cli
