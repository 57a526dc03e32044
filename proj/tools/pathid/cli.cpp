// Copyright 2026 The pathid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pathid/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "pathid/angle.hpp"
#include "pathid/circuit_io.hpp"
#include "pathid/detection.hpp"
#include "pathid/engine.hpp"
#include "pathid/errors.hpp"
#include "pathid/fringe_fit.hpp"
#include "pathid/graph.hpp"
#include "pathid/scenarios.hpp"
#include "pathid/verification.hpp"

namespace pathid::cli {
namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultSeed = 20260101;
constexpr int kDefaultPoints = 24;

struct CommonFlags {
  std::string scenario;
  std::string circuit_path;
  std::vector<std::string> sets;
  std::vector<std::string> patterns;
  std::optional<int> nmax;
  std::optional<double> gain;
  std::optional<int> order;
  std::string json_path;
  bool timing = false;
};

struct Loaded {
  std::string source;
  Circuit circuit;
  FockState input;
  Bindings bindings;
  std::vector<std::string> patterns;
  std::string sweep_parameter;
};

void add_source_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--scenario", flags.scenario, "Built-in scenario name");
  cmd->add_option("--circuit", flags.circuit_path, "Circuit description file (JSON)");
  cmd->add_option("--set", flags.sets, "Bind a parameter, name=angle (repeatable)");
  cmd->add_option("--pattern", flags.patterns, "Detection pattern (repeatable)");
  cmd->add_option("--nmax", flags.nmax, "Photon-number truncation cap");
  cmd->add_option("--g", flags.gain, "Per-source gain for scenarios");
  cmd->add_option("--order", flags.order, "Perturbative expansion order for scenarios");
  cmd->add_option("--json", flags.json_path, "Also write the JSON report to this file");
  cmd->add_flag("--timing", flags.timing, "Report wall-clock time");
}

std::pair<std::string, double> parse_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ParseError("--set expects name=value, got '" + text + "'");
  }
  return {text.substr(0, eq), parse_angle(std::string_view(text).substr(eq + 1))};
}

EvolveOptions evolve_options(const CommonFlags& flags) {
  EvolveOptions options;
  if (flags.nmax) {
    options.policy.max_photons = *flags.nmax;
  } else if (const char* env = std::getenv("PATHID_NMAX"); env && *env) {
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string_view(env).size()) {
      throw ParseError("PATHID_NMAX must be an integer, got '" + std::string(env) + "'");
    }
    options.policy.max_photons = value;
  }
  if (options.policy.max_photons < 1) throw ParseError("photon cap must be >= 1");
  return options;
}

Loaded load(const CommonFlags& flags) {
  if (flags.scenario.empty() == flags.circuit_path.empty()) {
    throw ParseError("give exactly one of --scenario or --circuit");
  }
  std::optional<Loaded> loaded;
  if (!flags.scenario.empty()) {
    const auto names = scenario_names();
    if (std::find(names.begin(), names.end(), flags.scenario) == names.end()) {
      std::string known;
      for (const auto& name : names) known += (known.empty() ? "" : ", ") + name;
      throw ParseError("unknown scenario '" + flags.scenario + "' (known: " + known + ")");
    }
    Scenario scenario = make_scenario(flags.scenario, ScenarioOptions{flags.gain, flags.order});
    loaded = Loaded{scenario.name,     std::move(scenario.circuit), scenario.input,
                    scenario.defaults, scenario.patterns,           scenario.sweep_parameter};
  } else {
    if (flags.gain || flags.order) {
      throw ParseError("--g and --order apply to scenarios; set them in the circuit file");
    }
    CircuitFile file = parse_circuit(read_text_file(flags.circuit_path));
    const FockState input = file.input_or_vacuum();
    Bindings bindings;
    for (const auto& name : file.circuit.parameters()) bindings[name] = 0.0;
    std::string all_detectors;
    const auto& registry = file.circuit.registry();
    for (std::size_t i : registry.indices_of_kind(ModeKind::kDetector)) {
      all_detectors += (all_detectors.empty() ? "" : ";") + registry.label(i) + ":1";
    }
    std::vector<std::string> patterns;
    if (!all_detectors.empty()) patterns.push_back(all_detectors);
    const std::string param =
        file.circuit.parameters().empty() ? "" : file.circuit.parameters().front();
    loaded = Loaded{flags.circuit_path, std::move(file.circuit), input, std::move(bindings),
                    std::move(patterns), param};
  }
  for (const auto& text : flags.sets) {
    auto [name, value] = parse_assignment(text);
    if (!loaded->circuit.has_parameter(name)) {
      throw ParseError("--set names unknown parameter '" + name + "'");
    }
    loaded->bindings[name] = value;
  }
  if (!flags.patterns.empty()) loaded->patterns = flags.patterns;
  return std::move(*loaded);
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json fit_json(const FringeFit& fit) {
  return Json{{"visibility", fit.visibility}, {"phase_offset", fit.phase_offset},
              {"period", fit.period},         {"amplitude", fit.amplitude},
              {"residual_rms", fit.residual_rms}, {"d_max", fit.d_max()},
              {"d_min", fit.d_min()}};
}

Json bindings_json(const Bindings& bindings) {
  Json out = Json::object();
  for (const auto& [name, value] : bindings) out[name] = value;
  return out;
}

Json truncation_json(const TruncationReport& report) {
  return Json{{"dropped_terms", report.dropped_terms}, {"leaked_norm2", report.leaked_norm2}};
}

// CSV-safe pattern identifier.
std::string pattern_id(std::string spec) {
  std::replace(spec.begin(), spec.end(), ',', ';');
  return spec;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (!path.empty()) write_file_atomic(path, text);
  out << text;
}

void finish_report(Json& report, const CommonFlags& flags, Clock::time_point start) {
  if (flags.timing) {
    report["wall_clock_s"] = std::chrono::duration<double>(Clock::now() - start).count();
  }
}

// ---------------------------------------------------------------------------

int cmd_simulate(const CommonFlags& flags, bool amplitudes, std::ostream& out) {
  const auto start = Clock::now();
  const Loaded loaded = load(flags);
  const EvolveOptions options = evolve_options(flags);
  const auto result = evolve(loaded.circuit, loaded.input, loaded.bindings, options);
  Json probabilities = Json::object();
  for (const auto& spec : loaded.patterns) {
    probabilities[pattern_id(spec)] =
        probability(result.state, DetectionPattern::parse(spec, loaded.circuit.registry()));
  }
  Json report{{"version", kFormatVersion},
              {"command", "simulate"},
              {"source", loaded.source},
              {"bindings", bindings_json(loaded.bindings)},
              {"probabilities", probabilities},
              {"norm2", norm2(result.state)},
              {"nmax", options.policy.max_photons},
              {"g", loaded.circuit.gain()},
              {"truncation", truncation_json(result.truncation)},
              {"warnings", result.warnings}};
  if (amplitudes) {
    Json amps = Json::object();
    for (const auto& [basis, amp] : result.state.amplitudes()) {
      amps[basis.to_string()] = complex_json(amp);
    }
    report["amplitudes"] = amps;
  }
  finish_report(report, flags, start);
  emit(report.dump(2) + "\n", flags.json_path, out);
  return kOk;
}

struct SweepFlags {
  std::string parameter;
  std::string range = "0:2pi";
  int points = kDefaultPoints;
  bool include_stop = false;
  std::string csv_path;
  std::optional<double> shots;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_sweep(const CommonFlags& flags, const SweepFlags& sf, std::ostream& out) {
  const auto start = Clock::now();
  const Loaded loaded = load(flags);
  const EvolveOptions options = evolve_options(flags);

  SweepSpec spec;
  spec.parameter = sf.parameter.empty() ? loaded.sweep_parameter : sf.parameter;
  if (spec.parameter.empty()) throw ParseError("circuit has no parameter to sweep");
  if (!loaded.circuit.has_parameter(spec.parameter)) {
    throw ParseError("--param names unknown parameter '" + spec.parameter + "'");
  }
  const auto colon = sf.range.find(':');
  if (colon == std::string::npos) throw ParseError("--range expects start:stop");
  spec.start = parse_angle(std::string_view(sf.range).substr(0, colon));
  spec.stop = parse_angle(std::string_view(sf.range).substr(colon + 1));
  spec.points = sf.points;
  spec.include_stop = sf.include_stop;
  spec.fixed = loaded.bindings;
  spec.fixed.erase(spec.parameter);

  std::vector<std::pair<std::string, DetectionPattern>> patterns;
  for (const auto& p : loaded.patterns) {
    patterns.emplace_back(pattern_id(p), DetectionPattern::parse(p, loaded.circuit.registry()));
  }
  const auto points = sweep(loaded.circuit, loaded.input, spec, options);

  std::vector<SeriesRow> rows;
  TruncationReport truncation;
  for (const auto& point : points) {
    truncation += point.result.truncation;
    for (const auto& [id, pattern] : patterns) {
      rows.push_back({point.value, id, probability(point.result.state, pattern), std::nullopt});
    }
  }
  if (sf.shots) sample_counts(rows, *sf.shots, sf.seed);

  Json per_pattern = Json::object();
  for (const auto& [id, pattern] : patterns) {
    std::vector<FringeSample> samples;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& row : rows) {
      if (row.pattern_id != id) continue;
      const double value = row.counts ? static_cast<double>(*row.counts) : row.probability;
      samples.push_back({row.phase, value});
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    Json entry{{"min", lo}, {"max", hi}};
    try {
      entry["fit"] = fit_json(fit_fringe(samples));
    } catch (const FitError& e) {
      entry["fit_error"] = e.what();
    }
    per_pattern[id] = entry;
  }

  std::ostringstream csv;
  write_series_csv(csv, rows);

  Json report{{"version", kFormatVersion},
              {"command", "sweep"},
              {"source", loaded.source},
              {"parameter", spec.parameter},
              {"range", Json::array({spec.start, spec.stop})},
              {"points", spec.points},
              {"include_stop", spec.include_stop},
              {"bindings", bindings_json(spec.fixed)},
              {"nmax", options.policy.max_photons},
              {"g", loaded.circuit.gain()},
              {"patterns", per_pattern},
              {"truncation", truncation_json(truncation)}};
  if (sf.shots) {
    report["shots"] = *sf.shots;
    report["seed"] = sf.seed;
  }
  finish_report(report, flags, start);
  const std::string report_text = report.dump(2) + "\n";
  if (!sf.csv_path.empty()) {
    write_file_atomic(sf.csv_path, csv.str());
    emit(report_text, flags.json_path, out);
  } else {
    if (!flags.json_path.empty()) write_file_atomic(flags.json_path, report_text);
    out << csv.str();
  }
  return kOk;
}

int cmd_fit(const std::string& csv_path, const std::string& json_path, std::ostream& out) {
  std::istringstream in(read_text_file(csv_path));
  const auto rows = read_series_csv(in);
  if (rows.empty()) throw FitError("CSV holds no data rows");
  std::map<std::string, std::vector<FringeSample>> series;
  for (const auto& row : rows) {
    series[row.pattern_id].push_back(
        {row.phase, row.counts ? static_cast<double>(*row.counts) : row.probability});
  }
  Json fits = Json::object();
  for (const auto& [id, samples] : series) {
    try {
      fits[id] = fit_json(fit_fringe(samples));
    } catch (const FitError& e) {
      throw FitError("pattern '" + id + "': " + e.what());
    }
  }
  Json report{{"version", kFormatVersion}, {"command", "fit"}, {"source", csv_path},
              {"fits", fits}};
  emit(report.dump(2) + "\n", json_path, out);
  return kOk;
}

int cmd_graph(const std::string& graph_path, const std::string& crosscheck,
              const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  const WeightedGraph graph = parse_graph(read_text_file(graph_path));
  const auto matchings = perfect_matchings(graph);
  Json matchings_json = Json::array();
  for (const auto& matching : matchings) {
    Json labels = Json::array();
    for (std::size_t e : matching) {
      labels.push_back(pair_label(graph.edges()[e].u, graph.edges()[e].v));
    }
    matchings_json.push_back(labels);
  }
  const auto amplitudes = pair_amplitudes(graph);
  Json amps = Json::object();
  for (const auto& [label, amp] : amplitudes) amps[label] = complex_json(amp);
  Json distribution = Json::object();
  for (const auto& [label, p] : normalized_distribution(amplitudes).probabilities) {
    distribution[label] = p;
  }
  Json report{{"version", kFormatVersion},
              {"command", "graph"},
              {"source", graph_path},
              {"vertices", graph.vertices()},
              {"matchings", matchings_json},
              {"matching_sum", complex_json(matching_sum(graph))},
              {"amplitudes", amps},
              {"distribution", distribution}};
  if (!crosscheck.empty()) {
    CommonFlags source = flags;
    source.scenario = crosscheck;
    const Loaded loaded = load(source);
    const auto check = graph_vs_engine_crosscheck(graph, loaded.circuit, loaded.bindings);
    Json engine = Json::object();
    for (const auto& [label, p] : check.engine_distribution.probabilities) engine[label] = p;
    Json entry{{"scenario", crosscheck},
               {"bindings", bindings_json(loaded.bindings)},
               {"pair_deviation", check.pair_deviation},
               {"pair_amplitude_deviation", check.pair_amplitude_deviation},
               {"max_deviation", check.max_deviation()},
               {"engine_distribution", engine}};
    entry["quad_deviation"] =
        check.quad_deviation ? Json(*check.quad_deviation) : Json(nullptr);
    report["crosscheck"] = entry;
  }
  finish_report(report, flags, start);
  emit(report.dump(2) + "\n", flags.json_path, out);
  return kOk;
}

int cmd_verify(const std::string& filter, const std::string& json_path, bool timing,
               std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  VerifyOptions options;
  options.filter = filter;
  const VerifyReport report = run_verification(options);
  std::string text = report.to_json();
  if (timing) {
    Json parsed = Json::parse(text);
    parsed["wall_clock_s"] = std::chrono::duration<double>(Clock::now() - start).count();
    text = parsed.dump(2) + "\n";
  }
  emit(text, json_path, out);
  for (const auto& name : report.failed()) err << "FAILED " << name << '\n';
  return report.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pathid: path-identity interference simulator"};
  app.name("pathid");
  app.require_subcommand(1);

  CommonFlags sim_flags;
  bool amplitudes = false;
  auto* simulate = app.add_subcommand("simulate", "Evolve a circuit once");
  add_source_flags(simulate, sim_flags);
  simulate->add_flag("--amplitudes", amplitudes, "Include the output state amplitudes");

  CommonFlags sweep_flags;
  SweepFlags sf;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter");
  add_source_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--param", sf.parameter, "Parameter to sweep");
  sweep_cmd->add_option("--range", sf.range, "start:stop, radians or multiples of pi");
  sweep_cmd->add_option("--points", sf.points, "Number of sweep points");
  sweep_cmd->add_flag("--include-stop", sf.include_stop, "Include the stop value");
  sweep_cmd->add_option("--csv", sf.csv_path, "Write the series CSV here");
  sweep_cmd->add_option("--shots", sf.shots, "Poisson counts with this many shots");
  sweep_cmd->add_option("--seed", sf.seed, "Seed for sampled counts");

  std::string fit_csv, fit_json_path;
  auto* fit = app.add_subcommand("fit", "Fit fringes in a sweep CSV");
  fit->add_option("csv,--csv", fit_csv, "Series CSV")->required();
  fit->add_option("--json", fit_json_path, "Also write the JSON report to this file");

  CommonFlags graph_flags;
  std::string graph_path, crosscheck;
  auto* graph = app.add_subcommand("graph", "Perfect matchings and pair distribution");
  graph->add_option("graph,--graph", graph_path, "Graph file (JSON)")->required();
  graph->add_option("--crosscheck", crosscheck, "Compare against this scenario");
  graph->add_option("--set", graph_flags.sets, "Bind a crosscheck parameter (repeatable)");
  graph->add_option("--g", graph_flags.gain, "Crosscheck source gain");
  graph->add_option("--order", graph_flags.order, "Crosscheck expansion order");
  graph->add_option("--json", graph_flags.json_path, "Also write the JSON report to this file");
  graph->add_flag("--timing", graph_flags.timing, "Report wall-clock time");

  std::string filter, verify_json;
  bool verify_timing = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--filter", filter, "Run checks whose name contains this text");
  verify->add_option("--json", verify_json, "Also write the JSON report to this file");
  verify->add_flag("--timing", verify_timing, "Report wall-clock time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailed;
  }

  try {
    if (*simulate) return cmd_simulate(sim_flags, amplitudes, out);
    if (*sweep_cmd) return cmd_sweep(sweep_flags, sf, out);
    if (*fit) return cmd_fit(fit_csv, fit_json_path, out);
    if (*graph) return cmd_graph(graph_path, crosscheck, graph_flags, out);
    if (*verify) return cmd_verify(filter, verify_json, verify_timing, out, err);
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " (line " << e.line() << ", column " << e.column() << ")";
    err << ": " << e.what() << '\n';
    return kParseFailed;
  } catch (const DetectionError& e) {
    err << "pattern error: " << e.what() << '\n';
    return kParseFailed;
  } catch (const FitError& e) {
    err << "fit error: " << e.what() << '\n';
    return kFitFailed;
  } catch (const GraphError& e) {
    err << "graph error: " << e.what() << '\n';
    return kGraphFailed;
  } catch (const std::exception& e) {
    err << "evolution error: " << e.what() << '\n';
    return kEvolutionFailed;
  }
  return kParseFailed;
}

}  // namespace pathid::cli
