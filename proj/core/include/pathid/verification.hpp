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
#include <functional>
#include <string>
#include <vector>

#include "pathid/circuit.hpp"

namespace pathid {

struct CheckResult {
  std::string name;
  // Acceptance criterion number the check belongs to.
  int criterion = 0;
  bool passed = false;
  // Worst observed error (or the measured quantity) and the bound it is held to.
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  // Runs only checks whose name contains this substring; empty runs all.
  std::string filter;
  // Applied to every scenario circuit before it is evolved. Used to inject
  // deliberate faults when testing the suite itself.
  std::function<Circuit(const Circuit&)> mutate;
  std::uint64_t seed = 0x5eed;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::vector<std::string> failed() const;
  // Deterministic JSON with sorted keys.
  std::string to_json() const;
};

std::vector<std::string> check_names();

// Throws EvolutionError when the filter selects no check.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace pathid
