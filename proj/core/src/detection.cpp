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

#include "pathid/detection.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "pathid/angle.hpp"
#include "pathid/errors.hpp"

namespace pathid {
namespace {

using Resolved = std::vector<std::pair<std::size_t, CountPredicate>>;

Resolved resolve(const DetectionPattern& pattern, const ModeRegistry& registry) {
  Resolved out;
  for (const auto& [label, predicate] : pattern.constraints()) {
    const auto index = registry.find(label);
    if (!index) throw DetectionError("pattern references unknown mode '" + label + "'");
    out.emplace_back(*index, predicate);
  }
  return out;
}

bool matches(const Resolved& resolved, const FockState& basis) {
  for (const auto& [index, predicate] : resolved) {
    if (!predicate.matches(basis[index])) return false;
  }
  return true;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_count(const std::string& text, std::string_view spec) {
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) {
    throw DetectionError("bad photon count '" + text + "' in pattern '" + std::string(spec) +
                         "'");
  }
  return value;
}

}  // namespace

DetectionPattern::DetectionPattern(Map constraints) : constraints_(std::move(constraints)) {
  if (constraints_.empty()) throw DetectionError("detection pattern constrains no mode");
}

DetectionPattern DetectionPattern::parse(std::string_view spec, const ModeRegistry& registry) {
  const std::string text = trim(spec);
  if (text.empty()) throw DetectionError("empty detection pattern");
  if (text.find(':') == std::string::npos) {
    std::vector<std::string> clicked;
    for (char c : text) clicked.emplace_back(1, c);
    return coincidence(registry, clicked);
  }
  Map constraints;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', ',');
  for (const auto& entry : split(normalized, ',')) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos) {
      throw DetectionError("pattern entry '" + entry + "' is not label:count");
    }
    const std::string label = trim(std::string_view(entry).substr(0, colon));
    const std::string value = trim(std::string_view(entry).substr(colon + 1));
    if (!registry.contains(label)) {
      throw DetectionError("pattern references unknown mode '" + label + "'");
    }
    CountPredicate predicate;
    if (value == "*") {
      predicate = CountPredicate::any();
    } else if (!value.empty() && value.back() == '+') {
      predicate = CountPredicate::at_least(parse_count(value.substr(0, value.size() - 1), spec));
    } else {
      predicate = CountPredicate::exactly(parse_count(value, spec));
    }
    if (!constraints.emplace(label, predicate).second) {
      throw DetectionError("mode '" + label + "' appears twice in pattern '" + text + "'");
    }
  }
  return DetectionPattern(std::move(constraints));
}

DetectionPattern DetectionPattern::coincidence(const ModeRegistry& registry,
                                               const std::vector<std::string>& clicked) {
  Map constraints;
  for (const auto& label : clicked) {
    const auto index = registry.find(label);
    if (!index || registry.kind(*index) != ModeKind::kDetector) {
      throw DetectionError("'" + label + "' is not a detector mode");
    }
    if (!constraints.emplace(label, CountPredicate::exactly(1)).second) {
      throw DetectionError("detector '" + label + "' listed twice");
    }
  }
  for (std::size_t i : registry.indices_of_kind(ModeKind::kDetector)) {
    constraints.emplace(registry.label(i), CountPredicate::exactly(0));
  }
  return DetectionPattern(std::move(constraints));
}

std::string DetectionPattern::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [label, predicate] : constraints_) {
    if (!first) out << ',';
    first = false;
    out << label << ':';
    switch (predicate.kind) {
      case CountPredicate::Kind::kExactly:
        out << predicate.count;
        break;
      case CountPredicate::Kind::kAtLeast:
        out << predicate.count << '+';
        break;
      case CountPredicate::Kind::kAny:
        out << '*';
        break;
    }
  }
  return out.str();
}

bool DetectionPattern::matches(const FockState& basis, const ModeRegistry& registry) const {
  return pathid::matches(resolve(*this, registry), basis);
}

double probability(const StateVector& state, const DetectionPattern& pattern) {
  const Resolved resolved = resolve(pattern, state.registry());
  double total = 0.0;
  for (const auto& [basis, amp] : state.amplitudes()) {
    if (matches(resolved, basis)) total += std::norm(amp);
  }
  return total;
}

double conditional_probability(const StateVector& state, const DetectionPattern& pattern,
                               const DetectionPattern& herald) {
  DetectionPattern::Map joint = herald.constraints();
  for (const auto& [label, predicate] : pattern.constraints()) {
    if (!joint.emplace(label, predicate).second) {
      throw DetectionError("pattern and herald both constrain mode '" + label + "'");
    }
  }
  const double p_herald = probability(state, herald);
  if (p_herald == 0.0) throw DetectionError("herald pattern has zero probability");
  return probability(state, DetectionPattern(std::move(joint))) / p_herald;
}

MarginalDistribution marginal_distribution(const StateVector& state,
                                           const std::vector<std::string>& modes) {
  if (modes.empty()) throw DetectionError("marginal over an empty mode subset");
  std::vector<std::size_t> indices;
  for (const auto& label : modes) {
    const auto index = state.registry().find(label);
    if (!index) throw DetectionError("marginal references unknown mode '" + label + "'");
    indices.push_back(*index);
  }
  MarginalDistribution out;
  std::vector<int> key(indices.size());
  for (const auto& [basis, amp] : state.amplitudes()) {
    for (std::size_t i = 0; i < indices.size(); ++i) key[i] = basis[indices[i]];
    out[key] += std::norm(amp);
  }
  return out;
}

double marginal_distance(const MarginalDistribution& lhs, const MarginalDistribution& rhs) {
  double worst = 0.0;
  for (const auto& [key, p] : lhs) {
    auto it = rhs.find(key);
    worst = std::max(worst, std::abs(p - (it == rhs.end() ? 0.0 : it->second)));
  }
  for (const auto& [key, q] : rhs) {
    if (!lhs.contains(key)) worst = std::max(worst, std::abs(q));
  }
  return worst;
}

NoSignallingReport no_signalling_check(const Circuit& circuit, const FockState& input,
                                       std::string_view parameter,
                                       const std::vector<std::string>& modes, int grid,
                                       const Bindings& fixed, const EvolveOptions& options) {
  if (!circuit.has_parameter(parameter)) {
    throw EvolutionError("no-signalling check: unknown parameter '" + std::string(parameter) +
                         "'");
  }
  if (grid < 2) throw DetectionError("no-signalling grid needs at least 2 points");
  Bindings bindings = fixed;
  const std::string name(parameter);
  bindings[name] = 0.0;
  const auto reference = marginal_distribution(evolve(circuit, input, bindings, options).state, modes);

  NoSignallingReport report;
  for (int k = 0; k < grid; ++k) {
    const double phase = 2.0 * kPi * k / grid;
    bindings[name] = phase;
    const auto marginal =
        marginal_distribution(evolve(circuit, input, bindings, options).state, modes);
    const double deviation = marginal_distance(marginal, reference);
    report.phases.push_back(phase);
    report.deviations.push_back(deviation);
    report.max_deviation = std::max(report.max_deviation, deviation);
  }
  return report;
}

double visibility(double d_max, double d_min) {
  if (d_max == 0.0 && d_min == 0.0) throw DetectionError("visibility of an all-zero fringe");
  if (!(d_max >= d_min && d_min >= 0.0)) {
    throw DetectionError("visibility needs d_max >= d_min >= 0");
  }
  return (d_max - d_min) / (d_max + d_min);
}

double channel_efficiency(double coincidences, double singles) {
  if (!(singles > 0.0)) throw DetectionError("channel efficiency needs singles > 0");
  if (coincidences < 0.0 || coincidences > singles) {
    throw DetectionError("channel efficiency needs 0 <= coincidences <= singles");
  }
  return coincidences / singles;
}

double efficiency_to_db(double efficiency) {
  if (!(efficiency > 0.0)) throw DetectionError("efficiency must be > 0 to express in dB");
  return 10.0 * std::log10(efficiency);
}

double db_to_efficiency(double decibels) { return std::pow(10.0, decibels / 10.0); }

double fringe_frequency_ratio(const FringeFit& quantum, const FringeFit& classical) {
  if (quantum.period == 0.0 || classical.period == 0.0) {
    throw DetectionError("fringe frequency ratio with a zero period");
  }
  return classical.period / quantum.period;
}

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows) {
  const bool with_counts =
      std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.counts.has_value(); });
  out << "phase_rad,pattern_id,probability" << (with_counts ? ",counts" : "") << '\n';
  for (const auto& row : rows) {
    out << format_double(row.phase) << ',' << row.pattern_id << ','
        << format_double(row.probability);
    if (with_counts) out << ',' << row.counts.value_or(0);
    out << '\n';
  }
}

std::vector<SeriesRow> read_series_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  int phase_col = -1, pattern_col = -1, prob_col = -1, counts_col = -1;
  std::size_t columns = 0;
  std::vector<SeriesRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (phase_col < 0) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "phase_rad") phase_col = static_cast<int>(i);
        if (fields[i] == "pattern_id") pattern_col = static_cast<int>(i);
        if (fields[i] == "probability") prob_col = static_cast<int>(i);
        if (fields[i] == "counts") counts_col = static_cast<int>(i);
      }
      if (phase_col < 0 || (prob_col < 0 && counts_col < 0)) {
        throw ParseError("CSV header needs phase_rad and probability or counts columns",
                         line_no, 1);
      }
      columns = fields.size();
      continue;
    }
    if (fields.size() != columns) {
      throw ParseError("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(columns),
                       line_no, 1);
    }
    SeriesRow row;
    try {
      row.phase = parse_angle(fields[static_cast<std::size_t>(phase_col)]);
      if (pattern_col >= 0) row.pattern_id = fields[static_cast<std::size_t>(pattern_col)];
      if (prob_col >= 0) row.probability = std::stod(fields[static_cast<std::size_t>(prob_col)]);
      if (counts_col >= 0) row.counts = std::stoll(fields[static_cast<std::size_t>(counts_col)]);
    } catch (const ParseError&) {
      throw ParseError("bad phase value", line_no, phase_col + 1);
    } catch (const std::exception&) {
      throw ParseError("bad numeric field", line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  if (phase_col < 0) throw ParseError("empty CSV input", line_no, 1);
  return rows;
}

void sample_counts(std::vector<SeriesRow>& rows, double shots, std::uint64_t seed) {
  if (!(shots >= 0.0)) throw DetectionError("shots must be >= 0");
  std::mt19937_64 rng(seed);
  for (auto& row : rows) {
    const double mean = shots * std::max(row.probability, 0.0);
    if (mean <= 0.0) {
      row.counts = 0;
      continue;
    }
    std::poisson_distribution<std::int64_t> draw(mean);
    row.counts = draw(rng);
  }
}

}  // namespace pathid
