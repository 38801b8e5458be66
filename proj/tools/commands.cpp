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

#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fourport/errors.hpp"
#include "fourport/multiport.hpp"

namespace fourport::cli {

namespace {

std::string pattern_digits(const SettingPattern& p) {
  std::string out;
  for (char c : to_display(p))
    if (c >= '0' && c <= '9') out += c;
  return out;
}

void check_normalization(CommandResult& result, double total, const std::string& what) {
  const double residual = std::abs(total - 1.0);
  if (residual > kNormTolerance)
    result.fail(what + ": probabilities sum to " + format_number(total) + " (residual " +
                format_number(residual) + ")");
}

void add_common_meta(OutputTable& t, const std::string& command) {
  t.add_meta("program", "fourport " FOURPORT_VERSION);
  t.add_meta("command", command);
}

WavepacketSpec coincident_spec() { return wavelength_to_spec(780e-9, 5e-9, {0.0, 0.0, 0.0, 0.0}); }

}  // namespace

CommandResult cmd_table1(double alpha, double phi) {
  CommandResult result;
  auto& t = result.table;
  add_common_meta(t, "table1");
  t.add_meta("alpha_rad", alpha);
  t.add_meta("phi_rad", phi);
  t.add_meta("P_id_engine", "all arrival times equal, full down-conversion state");
  t.header = {"label", "event", "P_dist", "P_dist_exact", "P_id_closed", "P_id_engine"};

  const auto dist = simulate(coincident_spec(), build_four_port(alpha, phi).matrix);
  check_normalization(result, dist.total(), "engine");

  for (const auto& s : {OccupationVector{4, 0, 0, 0}, OccupationVector{0, 1, 0, 3},
                        OccupationVector{0, 2, 0, 2}, OccupationVector{0, 0, 2, 2},
                        OccupationVector{1, 1, 1, 1}}) {
    const Rational pd = p_distinguishable(s);
    const double closed = *p_indistinguishable_closed(s, alpha, phi);
    const double engine = dist[s];
    if (std::abs(closed - engine) > kClosedFormTolerance)
      result.fail("event " + s.to_string() + ": engine " + format_number(engine) +
                  " differs from closed form " + format_number(closed));
    t.rows.push_back({"s" + std::to_string(event_index(s) + 1), s.to_string(), pd.to_double(),
                      pd.to_string(), closed, engine});
  }
  return result;
}

CommandResult cmd_figure2() {
  CommandResult result;
  auto& t = result.table;
  add_common_meta(t, "figure2");
  t.add_meta("P_id", "all arrival times equal, full down-conversion state");
  t.header = {"index", "event", "P_dist", "P_id_phi0_alpha0", "P_id_phi0_alphapi4",
              "P_id_phipi4_alpha0"};

  const auto input = build_input_state(gram_schmidt(coincident_spec()));
  const double q = std::numbers::pi / 4.0;
  const auto a = simulate(input, build_four_port(0.0, 0.0).matrix);
  const auto b = simulate(input, build_four_port(q, 0.0).matrix);
  const auto c = simulate(input, build_four_port(0.0, q).matrix);
  check_normalization(result, a.total(), "phi=0, alpha=0");
  check_normalization(result, b.total(), "phi=0, alpha=pi/4");
  check_normalization(result, c.total(), "phi=pi/4, alpha=0");

  double dist_total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double pd = p_distinguishable(a.events[i]).to_double();
    dist_total += pd;
    t.rows.push_back({static_cast<double>(i + 1), a.events[i].to_string(), pd,
                      a.probabilities[i], b.probabilities[i], c.probabilities[i]});
  }
  check_normalization(result, dist_total, "P_dist");
  return result;
}

CommandResult cmd_probabilities(const PointOptions& o) {
  CommandResult result;
  auto& t = result.table;
  add_common_meta(t, "probabilities");

  WavepacketSpec spec;
  std::array<double, 4> x{};
  if (o.times_fs) {
    for (std::size_t j = 0; j < 4; ++j) x[j] = (*o.times_fs)[j] * 1e-15 * kSpeedOfLight;
  } else {
    for (std::size_t j = 0; j < 4; ++j) x[j] = o.x_um[j] * 1e-6;
  }
  spec = wavelength_to_spec(o.lambda0_nm * 1e-9, o.dlambda_nm * 1e-9, x);

  ComplexMatrix u;
  if (o.unitary) {
    u = load_unitary(*o.unitary).matrix;
    if (u.rows() != 4) throw DimensionError("probabilities: unitary must be 4x4");
    t.add_meta("unitary", o.unitary->string());
  } else {
    u = build_four_port(o.alpha, o.phi).matrix;
    t.add_meta("alpha_rad", o.alpha);
    t.add_meta("phi_rad", o.phi);
  }
  t.add_meta("lambda0_nm", o.lambda0_nm);
  t.add_meta("delta_lambda_fwhm_nm", o.dlambda_nm);
  t.add_meta("coherence_length_um", spec.coherence_length * 1e6);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto port = std::to_string(j + 1);
    if (o.times_fs) t.add_meta("t" + port + "_fs", (*o.times_fs)[j]);
    else t.add_meta("x" + port + "_um", o.x_um[j]);
  }
  t.add_meta("terms", o.quadruplet_only ? "quadruplet" : "full");

  const auto expansion = gram_schmidt(spec);
  const auto dist = simulate(build_input_state(expansion, o.quadruplet_only
                                                              ? InputTerms::kQuadrupletOnly
                                                              : InputTerms::kFull),
                             u);
  const auto weights = setting_weights(expansion);
  for (const auto& p : all_setting_patterns())
    t.add_meta("setting_weight " + to_display(p), weights[p]);
  t.add_meta("normalization_residual", dist.total() - 1.0);
  check_normalization(result, dist.total(), "engine");

  t.header = {"index", "event", "probability", "P_dist"};
  for (std::size_t i = 0; i < dist.size(); ++i)
    t.rows.push_back({static_cast<double>(i + 1), dist.events[i].to_string(),
                      dist.probabilities[i], p_distinguishable(dist.events[i]).to_double()});
  return result;
}

OutputTable sweep_table(const ScenarioConfig& config, const std::vector<SweepRow>& rows) {
  OutputTable t;
  add_common_meta(t, "sweep");
  t.add_meta("scenario", std::string(to_string(config.kind)));
  t.add_meta("lambda0_nm", config.lambda0 * 1e9);
  t.add_meta("delta_lambda_fwhm_nm", config.delta_lambda_fwhm * 1e9);
  t.add_meta("coherence_length_um", coherence_length(config.lambda0, config.delta_lambda_fwhm) * 1e6);
  t.add_meta("alpha_rad", config.alpha);
  t.add_meta("phi_rad", config.phi);
  t.add_meta("phi_samples", std::to_string(config.phi_samples));
  t.add_meta("terms", config.terms == InputTerms::kFull ? "full" : "quadruplet");
  t.add_meta("points", std::to_string(rows.size()));
  switch (config.kind) {
    case ScenarioKind::kContinuous:
      t.add_meta("sweep_value", "y in meters, path lengths (0, y, -y, 2y)");
      break;
    case ScenarioKind::kStepwise:
      t.add_meta("sweep_value", "cumulative tuned path length in meters");
      break;
    case ScenarioKind::kCustom:
      t.add_meta("sweep_value", "point index");
      break;
  }
  t.add_meta("grid_note", "sweep range and resolution are implementation defaults unless set in the config");
  t.add_meta("setting_weights", "port-level Gram-Schmidt decomposition, W_abcd = display form {a,b,c,d}");

  const auto events = event_order();
  for (std::size_t i = 0; i < events.size(); ++i)
    t.add_meta("P_" + std::to_string(i + 1), events[i].to_string());

  t.header = {"sweep_value", "x1_um", "x2_um", "x3_um", "x4_um"};
  for (std::size_t i = 0; i < events.size(); ++i) t.header.push_back("P_" + std::to_string(i + 1));
  const bool envelopes = config.phi_samples > 0;
  if (envelopes) {
    for (std::size_t i = 0; i < events.size(); ++i) t.header.push_back("Pmin_" + std::to_string(i + 1));
    for (std::size_t i = 0; i < events.size(); ++i) t.header.push_back("Pmax_" + std::to_string(i + 1));
  }
  for (const auto& p : all_setting_patterns()) t.header.push_back("W_" + pattern_digits(p));

  for (const auto& r : rows) {
    std::vector<Cell> cells{r.sweep_value};
    for (double xj : r.path_lengths) cells.emplace_back(xj * 1e6);
    for (double p : r.probabilities) cells.emplace_back(p);
    if (envelopes) {
      for (double p : r.envelope->min) cells.emplace_back(p);
      for (double p : r.envelope->max) cells.emplace_back(p);
    }
    for (const auto& p : all_setting_patterns()) cells.emplace_back(r.settings[p]);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

namespace {

void write_plot_script(const std::filesystem::path& csv, const ScenarioConfig& config) {
  auto script_path = csv;
  script_path += ".gp";
  std::ofstream gp(script_path);
  if (!gp) throw std::runtime_error("cannot write " + script_path.string());
  // Columns: 1 sweep_value, 2-5 path lengths, 6.. P_1..P_35.
  const auto p = [](std::size_t k) { return std::to_string(5 + k); };
  const auto pmin = [](std::size_t k) { return std::to_string(5 + 35 + k); };
  const auto pmax = [](std::size_t k) { return std::to_string(5 + 70 + k); };
  gp << "# gnuplot script for " << csv.filename().string() << "\n"
     << "set datafile separator ','\n"
     << "set datafile commentschars '#'\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 'sweep value'\n"
     << "set ylabel 'event probability'\n"
     << "file = '" << csv.string() << "'\n";
  if (config.phi_samples > 0) {
    gp << "plot file using 1:" << pmin(35) << ":" << pmax(35)
       << " with filledcurves fs transparent solid 0.3 lc 'blue' notitle, \\\n"
       << "     file using 1:" << pmin(14) << ":" << pmax(14)
       << " with filledcurves fs transparent solid 0.3 lc 'red' notitle, \\\n"
       << "     file using 1:" << pmin(21) << ":" << pmax(21)
       << " with filledcurves fs transparent solid 0.3 lc 'dark-green' notitle, \\\n"
       << "     file using 1:" << p(35) << " with lines lc 'blue', \\\n"
       << "     file using 1:" << p(14) << " with lines lc 'red', \\\n"
       << "     file using 1:" << p(21) << " with lines lc 'dark-green'\n";
  } else {
    gp << "plot file using 1:" << p(35) << " with lines lc 'blue', \\\n"
       << "     file using 1:" << p(14) << " with lines lc 'red', \\\n"
       << "     file using 1:" << p(21) << " with lines lc 'dark-green'\n";
  }
}

}  // namespace

CommandResult cmd_sweep(const std::filesystem::path& config_path,
                        const std::filesystem::path& out_path, const SweepOptions& options) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open scenario file " + config_path.string());
  std::stringstream text;
  text << in.rdbuf();
  auto config = parse_scenario_config(text.str());
  config.threads = options.threads;
  if (options.phi_samples) config.phi_samples = *options.phi_samples;

  const auto rows = run_sweep(config);
  CommandResult result;
  result.table = sweep_table(config, rows);
  result.table.add_meta("config_file", config_path.string());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double total = 0.0;
    for (double p : rows[i].probabilities) total += p;
    check_normalization(result, total, "sweep row " + std::to_string(i));
  }

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write output file " + out_path.string());
  write_csv(out, result.table);
  out.close();
  if (!out) throw std::runtime_error("error while writing " + out_path.string());
  if (options.emit_plot_script) write_plot_script(out_path, config);
  return result;
}

CommandResult cmd_validate_unitary(const std::filesystem::path& path) {
  CommandResult result;
  auto& t = result.table;
  add_common_meta(t, "validate-unitary");
  t.add_meta("file", path.string());
  const auto loaded = load_unitary(path);
  const auto strict = validate(loaded.matrix, kConstructedTolerance);
  t.header = {"dimension", "unitary", "hadamard", "unitarity_deviation", "hadamard_deviation",
              "max_deviation"};
  t.rows.push_back({static_cast<double>(loaded.matrix.rows()),
                    loaded.report.unitary ? "true" : "false",
                    validate(loaded.matrix, kLoadedTolerance).hadamard ? "true" : "false",
                    strict.unitarity_deviation, strict.hadamard_deviation, strict.max_deviation});
  return result;
}

unsigned threads_from_env() {
  const char* v = std::getenv("SIM_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0) throw std::invalid_argument("SIM_THREADS must be a non-negative integer");
  return static_cast<unsigned>(n);
}

}  // namespace fourport::cli
