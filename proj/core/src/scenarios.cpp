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

#include "pathid/scenarios.hpp"

#include <cmath>

#include "pathid/angle.hpp"
#include "pathid/errors.hpp"

namespace pathid {
namespace {

constexpr double kDefaultPerturbativeGain = 0.1;
constexpr double kDefaultExactGain = 0.25;

RegistryPtr abcd() { return ModeRegistry::detectors({"a", "b", "c", "d"}); }

Bindings zero_bindings(const std::vector<std::string>& names) {
  Bindings out;
  for (const auto& name : names) out[name] = 0.0;
  return out;
}

PairSourcePerturbative source(std::string a, std::string b, double gain, PhaseExpr phase,
                              int order) {
  return PairSourcePerturbative{std::move(a), std::move(b), gain, std::move(phase), order};
}

const std::vector<std::string> kQuadPatterns = {"abcd", "ab", "ac", "bd", "cd"};

Scenario herzog(int sources, const ScenarioOptions& options) {
  const double g = options.gain.value_or(kDefaultPerturbativeGain);
  const int k = options.order.value_or(1);
  auto registry = ModeRegistry::detectors({"a", "b"});
  std::vector<Element> elements;
  std::vector<std::string> params;
  if (sources == 2) {
    // Crystal I carries the pump phase, crystal II the reference.
    elements.push_back(source("a", "b", g, PhaseExpr::parameter("phi"), k));
    params.push_back("phi");
  }
  elements.push_back(source("a", "b", g, 0.0, k));
  Circuit circuit(registry, std::move(elements), params, SourceModel::kPerturbative, g);
  return Scenario{sources == 2 ? "herzog2" : "herzog1",
                  sources == 2 ? "two pair sources on (a,b) with pump phase phi"
                               : "one pair source on (a,b)",
                  std::move(circuit),
                  FockState{0, 0},
                  zero_bindings(params),
                  sources == 2 ? "phi" : "",
                  {"ab"}};
}

Scenario quad4(const ScenarioOptions& options) {
  const double g = options.gain.value_or(kDefaultPerturbativeGain);
  const int k = options.order.value_or(2);
  std::vector<Element> elements = {
      source("a", "c", g, 0.0, k),                            // I
      source("b", "d", g, PhaseExpr::parameter("theta"), k),  // II
      source("a", "b", g, 0.0, k),                            // III
      source("c", "d", g, 0.0, k),                            // IV
  };
  Circuit circuit(abcd(), std::move(elements), {"theta"}, SourceModel::kPerturbative, g);
  return Scenario{"quad4",
                  "four sources ab, cd, ac, bd with phase theta on bd",
                  std::move(circuit),
                  FockState{0, 0, 0, 0},
                  {{"theta", 0.0}},
                  "theta",
                  kQuadPatterns};
}

// Sources I, II before MZI2 on (b,c); sources III, IV after it. Mode a and d
// carry signal photons, b and c idler photons.
struct ChipPhases {
  PhaseExpr source1, source2, source3, source4;
};

std::vector<Element> chip_elements(double g, int order, const ChipPhases& phases,
                                   const Element& mzi2) {
  return {
      source("a", "b", g, phases.source1, order),
      source("c", "d", g, phases.source2, order),
      mzi2,
      source("a", "b", g, phases.source3, order),
      source("c", "d", g, phases.source4, order),
  };
}

// theta1 is the phase on the pump of sources III and IV, theta5 / theta4 on
// III / IV alone; SFWM doubles pump phases. theta3 / theta2 sit on the pair
// amplitudes of sources I / II.
ChipPhases chip_phases() {
  ChipPhases p;
  p.source1 = PhaseExpr::parameter("theta3");
  p.source2 = PhaseExpr::parameter("theta2");
  p.source3 = PhaseExpr::parameter("theta1", 2.0).plus("theta5", 2.0);
  p.source4 = PhaseExpr::parameter("theta1", 2.0).plus("theta4", 2.0);
  return p;
}

const std::vector<std::string> kChipParams = {"theta1", "theta2", "theta3", "theta4",
                                              "theta5"};

Scenario chip(bool swap, const ScenarioOptions& options) {
  const double g = options.gain.value_or(kDefaultPerturbativeGain);
  const int k = options.order.value_or(2);
  const Element mzi2 = swap ? Element(ModeSwap{"b", "c"}) : Element(BeamSplitter{"b", "c", 1.0});
  Circuit circuit(abcd(), chip_elements(g, k, chip_phases(), mzi2), kChipParams,
                  SourceModel::kPerturbative, g);
  return Scenario{swap ? "chip-swap" : "chip-pass",
                  swap ? "chip layout, MZI2 swapping b and c, phases theta1..theta5"
                       : "chip layout, MZI2 in bar state, phases theta1..theta5",
                  std::move(circuit),
                  FockState{0, 0, 0, 0},
                  zero_bindings(kChipParams),
                  "theta1",
                  swap ? kQuadPatterns : std::vector<std::string>{"ab", "cd", "abcd"}};
}

// Main-text theta on the swapping chip: the four-fold amplitude phase is
// 2(2 theta1 + theta4 + theta5) - (theta2 + theta3); here theta enters as
// theta/2 on each of sources III and IV.
Scenario quad4_swap(const ScenarioOptions& options) {
  const double g = options.gain.value_or(kDefaultPerturbativeGain);
  const int k = options.order.value_or(2);
  ChipPhases p;
  p.source3 = PhaseExpr::parameter("theta", 0.5);
  p.source4 = PhaseExpr::parameter("theta", 0.5);
  Circuit circuit(abcd(), chip_elements(g, k, p, ModeSwap{"b", "c"}), {"theta"},
                  SourceModel::kPerturbative, g);
  return Scenario{"quad4-swap",
                  "chip layout with swapping MZI2, theta/2 pump phase on sources III and IV",
                  std::move(circuit),
                  FockState{0, 0, 0, 0},
                  {{"theta", 0.0}},
                  "theta",
                  kQuadPatterns};
}

Scenario si_fig8(const ScenarioOptions& options) {
  const double g = options.gain.value_or(kDefaultPerturbativeGain);
  const int k = options.order.value_or(1);
  ChipPhases p;
  p.source1 = PhaseExpr::parameter("theta3");
  p.source2 = PhaseExpr::parameter("theta2");
  p.source3 = PhaseExpr::parameter("theta3", 1.0, -kPi / 4);
  p.source4 = PhaseExpr::parameter("theta2", 1.0, kPi / 4);
  Circuit circuit(abcd(), chip_elements(g, k, p, BeamSplitter{"b", "c", 0.5}),
                  {"theta2", "theta3"}, SourceModel::kPerturbative, g);
  return Scenario{"si-fig8",
                  "chip layout with 50:50 MZI2; I/III and II/IV relative phases -pi/4, pi/4",
                  std::move(circuit),
                  FockState{0, 0, 0, 0},
                  {{"theta2", 0.0}, {"theta3", 0.0}},
                  "theta2",
                  {"ab", "ac", "ad", "bc", "bd", "cd"}};
}

Scenario si_eq10(const ScenarioOptions& options) {
  const double g = options.gain.value_or(kDefaultExactGain);
  auto registry = ModeRegistry::make({{"p1", ModeKind::kPump},
                                      {"p2", ModeKind::kPump},
                                      {"a", ModeKind::kDetector},
                                      {"b", ModeKind::kDetector},
                                      {"c", ModeKind::kDetector},
                                      {"d", ModeKind::kDetector}});
  std::vector<Element> elements = {
      PairSourceExactSPDC{"p1", "a", "c", g},
      PairSourceExactSPDC{"p2", "b", "d", g},
      PhaseShifter{"p1", PhaseExpr::parameter("phi")},
      PairSourceExactSPDC{"p1", "a", "b", g},
      PairSourceExactSPDC{"p2", "c", "d", g},
  };
  Circuit circuit(registry, std::move(elements), {"phi"}, SourceModel::kExact, g);
  return Scenario{"si-eq10",
                  "two pump photons through four exact SPDC crystals, phase phi on p1",
                  std::move(circuit),
                  FockState{1, 1, 0, 0, 0, 0},
                  {{"phi", 0.0}},
                  "phi",
                  {"abcd", "ab", "cd", "ac", "bd"}};
}

Scenario mzi_classical(const ScenarioOptions&) {
  auto registry = ModeRegistry::detectors({"u", "v"});
  std::vector<Element> elements = {
      BeamSplitter{"u", "v", 0.5},
      PhaseShifter{"u", PhaseExpr::parameter("theta")},
      BeamSplitter{"u", "v", 0.5},
  };
  Circuit circuit(registry, std::move(elements), {"theta"}, SourceModel::kPerturbative, 0.0);
  return Scenario{"mzi-classical",
                  "single photon through a balanced Mach-Zehnder with phase theta",
                  std::move(circuit),
                  FockState{1, 0},
                  {{"theta", 0.0}},
                  "theta",
                  {"u", "v"}};
}

}  // namespace

Scenario make_scenario(std::string_view name, const ScenarioOptions& options) {
  if (options.order && *options.order < 1) throw EvolutionError("order must be >= 1");
  if (name == "herzog1") return herzog(1, options);
  if (name == "herzog2") return herzog(2, options);
  if (name == "quad4") return quad4(options);
  if (name == "quad4-swap") return quad4_swap(options);
  if (name == "chip-pass") return chip(false, options);
  if (name == "chip-swap") return chip(true, options);
  if (name == "si-eq10") return si_eq10(options);
  if (name == "si-fig8") return si_fig8(options);
  if (name == "mzi-classical") return mzi_classical(options);
  throw EvolutionError("unknown scenario '" + std::string(name) + "'");
}

Circuit build_scenario(std::string_view name, const ScenarioOptions& options) {
  return make_scenario(name, options).circuit;
}

std::vector<std::string> scenario_names() {
  return {"herzog1",  "herzog2", "quad4",   "quad4-swap",   "chip-pass",
          "chip-swap", "si-eq10", "si-fig8", "mzi-classical"};
}

}  // namespace pathid
