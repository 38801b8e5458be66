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

// fourport: exact event probabilities for four partially distinguishable
// photons in a four-port beam splitter array.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fourport/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kIoError = 3 };

int emit(const fourport::cli::CommandResult& result, const std::string& format,
         const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kIoError;
    }
    out = &file;
  }
  if (format == "json") fourport::cli::write_json(*out, result.table);
  else fourport::cli::write_csv(*out, result.table);
  for (const auto& d : result.diagnostics) std::cerr << "check failed: " << d << '\n';
  return result.ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fourport;
  CLI::App app{"Exact output-event probabilities for four photons in a four-port array"};
  app.set_version_flag("--version", std::string("fourport ") + FOURPORT_VERSION);
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  double alpha = 0.0, phi = 0.0;
  auto* table1 = app.add_subcommand("table1", "Five tabulated events: closed forms vs engine");
  table1->add_option("--alpha", alpha, "Enclosed phase alpha (rad)");
  table1->add_option("--phi", phi, "Input phase phi (rad)");
  add_output(table1);

  auto* figure2 = app.add_subcommand("figure2", "All 35 events, distinguishable and indistinguishable");
  add_output(figure2);

  cli::PointOptions point;
  std::vector<double> times_fs;
  auto* probs = app.add_subcommand("probabilities", "Event probabilities for one configuration");
  probs->add_option("--lambda0-nm", point.lambda0_nm, "Central wavelength (nm)")
      ->check(CLI::PositiveNumber);
  probs->add_option("--dlambda-nm", point.dlambda_nm, "Bandwidth, intensity FWHM (nm)")
      ->check(CLI::PositiveNumber);
  probs->add_option("--alpha", point.alpha, "Enclosed phase alpha (rad)");
  probs->add_option("--phi", point.phi, "Input phase phi (rad)");
  auto* x1 = probs->add_option("--x1-um", point.x_um[0], "Path length of port 1 (um)");
  auto* x2 = probs->add_option("--x2-um", point.x_um[1], "Path length of port 2 (um)");
  auto* x3 = probs->add_option("--x3-um", point.x_um[2], "Path length of port 3 (um)");
  auto* x4 = probs->add_option("--x4-um", point.x_um[3], "Path length of port 4 (um)");
  auto* times = probs->add_option("--times-fs", times_fs, "Arrival times t1..t4 (fs)")
                    ->expected(4);
  for (auto* x : {x1, x2, x3, x4}) times->excludes(x);
  std::string unitary_path;
  probs->add_option("--unitary", unitary_path, "Load a 4x4 unitary instead of U(alpha, phi)")
      ->check(CLI::ExistingFile);
  probs->add_flag("--quadruplet-only", point.quadruplet_only,
                  "Drop the double-twin components of the source state");
  add_output(probs);

  std::string config_path, sweep_out;
  bool plot_script = false;
  int phi_samples = -1;
  auto* sweep = app.add_subcommand("sweep", "Run a transition scenario and write CSV");
  sweep->add_option("config", config_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_out, "CSV output path")->required();
  sweep->add_option("--phi-samples", phi_samples, "Override phi samples for fringe envelopes");
  sweep->add_flag("--emit-plot-script", plot_script, "Also write <out>.gp for gnuplot");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate-unitary", "Check a unitary file");
  validate_cmd->add_option("file", validate_path, "Unitary text file")->required();
  add_output(validate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table1) return emit(cli::cmd_table1(alpha, phi), format, out_path);
    if (*figure2) return emit(cli::cmd_figure2(), format, out_path);
    if (*probs) {
      if (!times_fs.empty())
        point.times_fs = std::array<double, 4>{times_fs[0], times_fs[1], times_fs[2], times_fs[3]};
      if (!unitary_path.empty()) point.unitary = unitary_path;
      return emit(cli::cmd_probabilities(point), format, out_path);
    }
    if (*sweep) {
      cli::SweepOptions options;
      options.emit_plot_script = plot_script;
      options.threads = cli::threads_from_env();
      if (phi_samples >= 0) options.phi_samples = static_cast<std::size_t>(phi_samples);
      const auto result = cli::cmd_sweep(config_path, sweep_out, options);
      for (const auto& d : result.diagnostics) std::cerr << "check failed: " << d << '\n';
      std::cerr << "wrote " << result.table.rows.size() << " rows to " << sweep_out << '\n';
      return result.ok ? kOk : kCheckFailed;
    }
    if (*validate_cmd) {
      const auto result = cli::cmd_validate_unitary(validate_path);
      return emit(result, format, out_path);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnitaryParseError& e) {
    std::cerr << "unitary error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}
