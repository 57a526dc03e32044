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

#include "pathid/circuit.hpp"
#include "pathid/fock.hpp"
#include "pathid/graph.hpp"

namespace pathid {

inline constexpr std::string_view kFormatVersion = "pathid/1";

struct CircuitFile {
  Circuit circuit;
  // Optional "input" occupation list; vacuum when absent.
  std::optional<FockState> input;

  FockState input_or_vacuum() const;
};

// JSON circuit document:
//   {"version": "pathid/1", "modes": ["a", {"label": "p", "kind": "pump"}],
//    "model": "perturbative" | "exact", "g": 0.1, "parameters": ["theta"],
//    "elements": [{"type": "source", "modes": ["a", "b"], "phase": "pi/4"}, ...],
//    "input": [0, 0]}
// Phases are numbers, angle strings ("-pi/4") or
// {"const": <angle>, "terms": [["theta", 0.5], ...]}.
// Syntax errors raise ParseError with line and column; structural problems
// raise ParseError naming the offending JSON path; circuit validation errors
// propagate as EvolutionError.
CircuitFile parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit,
                              const std::optional<FockState>& input = std::nullopt);

// JSON graph document:
//   {"version": "pathid/1", "vertices": ["a", "b"], "multigraph": false,
//    "edges": [{"u": "a", "v": "b", "weight": w}]}
// Weights are numbers, [re, im] pairs or {"mag": m, "phase": <angle>}. With
// "multigraph": true repeated edges are summed.
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& graph);

// Throws ParseError when the file cannot be read.
std::string read_text_file(const std::string& path);
// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace pathid
