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

#include <string>
#include <vector>

#include "pathid/circuit.hpp"
#include "pathid/fock.hpp"

namespace pathid {

struct EvolveOptions {
  TruncationPolicy policy;
  // Leaked norm^2 above this adds a warning to the result.
  double leak_warning_threshold = 1e-6;
};

struct EvolveResult {
  StateVector state;
  TruncationReport truncation;
  std::vector<std::string> warnings;
};

// Applies the elements left to right and prunes the result.
EvolveResult evolve(const Circuit& circuit, const FockState& input, const Bindings& bindings,
                    const EvolveOptions& options = {});
EvolveResult evolve(const Circuit& circuit, const StateVector& input,
                    const Bindings& bindings, const EvolveOptions& options = {});

struct SweepSpec {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  // false gives the half-open grid [start, stop) used for periodic phases.
  bool include_stop = true;
  // Values for every other circuit parameter.
  Bindings fixed;

  // Throws EvolutionError unless points >= 2 and start < stop.
  void validate() const;
  std::vector<double> values() const;
};

struct SweepPoint {
  double value = 0.0;
  EvolveResult result;
};

// One evolve per grid point, ordered by parameter value. Points run on up to
// `threads` workers (0 = hardware concurrency); the output does not depend on
// scheduling.
std::vector<SweepPoint> sweep(const Circuit& circuit, const FockState& input,
                              const SweepSpec& spec, const EvolveOptions& options = {},
                              unsigned threads = 0);

}  // namespace pathid
