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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathid/circuit.hpp"
#include "pathid/fock.hpp"

namespace pathid {

struct ScenarioOptions {
  // Per-source gain; scenario default when unset.
  std::optional<double> gain;
  // Perturbative expansion order; scenario default when unset.
  std::optional<int> order;
};

struct Scenario {
  std::string name;
  std::string description;
  Circuit circuit;
  FockState input;
  // Every circuit parameter bound to its default value.
  Bindings defaults;
  // Parameter a sweep varies when none is given.
  std::string sweep_parameter;
  // Detection pattern specs (see DetectionPattern::parse) reported by default.
  std::vector<std::string> patterns;
};

// Known names:
//   herzog1      single pair source on (a,b); reference rate for herzog2
//   herzog2      two sources on (a,b), pump phase phi on the first
//   quad4        four sources ab, cd, ac and bd (pump phase theta on bd)
//   quad4-swap   chip layout: sources on ab, cd; b<->c swap; sources on ab, cd
//                each pumped with theta/2
//   chip-pass    chip layout with bar-state MZI2 and phases theta1..theta5
//   chip-swap    chip layout with swapping MZI2 and phases theta1..theta5
//   si-eq10      two quantized pump photons p1, p2 through four exact SPDC
//                crystals, phase phi on p1 between the layers
//   si-fig8      chip layout with 50:50 MZI2, relative phases -pi/4 and +pi/4
//   mzi-classical single photon through a balanced Mach-Zehnder, phase theta
// Throws EvolutionError for unknown names.
Scenario make_scenario(std::string_view name, const ScenarioOptions& options = {});
Circuit build_scenario(std::string_view name, const ScenarioOptions& options = {});
std::vector<std::string> scenario_names();

}  // namespace pathid
