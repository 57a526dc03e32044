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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathid/circuit.hpp"
#include "pathid/engine.hpp"
#include "pathid/fock.hpp"
#include "pathid/fringe_fit.hpp"

namespace pathid {

struct CountPredicate {
  enum class Kind { kExactly, kAtLeast, kAny };

  Kind kind = Kind::kAny;
  int count = 0;

  static CountPredicate exactly(int n) { return {Kind::kExactly, n}; }
  static CountPredicate at_least(int n) { return {Kind::kAtLeast, n}; }
  static CountPredicate any() { return {Kind::kAny, 0}; }

  bool matches(int n) const {
    switch (kind) {
      case Kind::kExactly:
        return n == count;
      case Kind::kAtLeast:
        return n >= count;
      case Kind::kAny:
        return true;
    }
    return false;
  }

  bool operator==(const CountPredicate&) const = default;
};

// Per-mode photon-count predicate. Modes absent from the map are summed over.
class DetectionPattern {
 public:
  using Map = std::map<std::string, CountPredicate, std::less<>>;

  // Throws DetectionError when empty.
  explicit DetectionPattern(Map constraints);

  // "a:1,b:1,c:0" (exact), "a:1+" (at least), "a:*" (any), with ',' or ';'
  // between entries, or the shorthand "ab": one photon in each listed detector mode and none in the other
  // detector modes of the registry (genuine coincidence; pumps and loss modes
  // stay marginalized). Throws DetectionError on bad syntax or unknown modes.
  static DetectionPattern parse(std::string_view spec, const ModeRegistry& registry);
  static DetectionPattern coincidence(const ModeRegistry& registry,
                                      const std::vector<std::string>& clicked);

  const Map& constraints() const { return constraints_; }
  // Canonical explicit form, sorted by label.
  std::string to_string() const;

  // Throws DetectionError when a constrained mode is not in the registry.
  bool matches(const FockState& basis, const ModeRegistry& registry) const;

 private:
  Map constraints_;
};

// Sum of |amp|^2 over basis states matching the pattern.
double probability(const StateVector& state, const DetectionPattern& pattern);

// P(pattern | herald) = P(pattern and herald) / P(herald). The two patterns
// must constrain disjoint modes. Throws DetectionError when P(herald) == 0.
double conditional_probability(const StateVector& state, const DetectionPattern& pattern,
                               const DetectionPattern& herald);

using MarginalDistribution = std::map<std::vector<int>, double>;

// Distribution over occupation tuples of `modes` (in the given order), all
// other modes summed over. Throws DetectionError for an empty subset.
MarginalDistribution marginal_distribution(const StateVector& state,
                                           const std::vector<std::string>& modes);

// L-infinity distance between two marginals; missing keys count as zero.
double marginal_distance(const MarginalDistribution& lhs, const MarginalDistribution& rhs);

struct NoSignallingReport {
  double max_deviation = 0.0;
  std::vector<double> phases;
  std::vector<double> deviations;
  bool pass(double tolerance = 1e-10) const { return max_deviation < tolerance; }
};

// Max over a uniform grid on [0, 2pi) of the marginal distance between the
// subset marginal at each phase and at phase 0.
NoSignallingReport no_signalling_check(const Circuit& circuit, const FockState& input,
                                       std::string_view parameter,
                                       const std::vector<std::string>& modes, int grid,
                                       const Bindings& fixed = {},
                                       const EvolveOptions& options = {});

// (d_max - d_min) / (d_max + d_min). Throws DetectionError when both are zero
// or the ordering d_max >= d_min >= 0 fails.
double visibility(double d_max, double d_min);

// C / N. Throws DetectionError unless N > 0 and 0 <= C <= N.
double channel_efficiency(double coincidences, double singles);
// 10 log10(eta), negative for loss.
double efficiency_to_db(double efficiency);
double db_to_efficiency(double decibels);

// T_classical / T_quantum. Throws DetectionError on a zero period.
double fringe_frequency_ratio(const FringeFit& quantum, const FringeFit& classical);

// Sweep series in the CSV exchange format:
//   phase_rad,pattern_id,probability[,counts]
struct SeriesRow {
  double phase = 0.0;
  std::string pattern_id;
  double probability = 0.0;
  std::optional<std::int64_t> counts;
};

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows);
// Throws ParseError with the offending line.
std::vector<SeriesRow> read_series_csv(std::istream& in);

// Poisson counts with mean shots * probability, one draw per row, from a
// generator seeded with `seed`.
void sample_counts(std::vector<SeriesRow>& rows, double shots, std::uint64_t seed);

}  // namespace pathid
