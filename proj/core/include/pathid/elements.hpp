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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pathid/fock.hpp"

namespace pathid {

// Named phase parameter values, radians.
using Bindings = std::map<std::string, double, std::less<>>;

// Affine phase: constant + sum(coefficient * parameter). Coefficients carry
// the pump-to-pair multipliers (a pump phase shifter driving a pair source
// through two pump photons contributes twice its phase).
struct PhaseExpr {
  double constant = 0.0;
  std::vector<std::pair<std::string, double>> terms;

  PhaseExpr() = default;
  PhaseExpr(double value) : constant(value) {}  // NOLINT(google-explicit-constructor)
  static PhaseExpr parameter(std::string name, double coefficient = 1.0,
                             double offset = 0.0);

  PhaseExpr& plus(std::string name, double coefficient);

  // Throws EvolutionError when a referenced parameter is unbound.
  double evaluate(const Bindings& bindings) const;
  bool is_constant() const { return terms.empty(); }

  bool operator==(const PhaseExpr&) const = default;
};

struct PhaseShifter {
  std::string mode;
  PhaseExpr phase;

  bool operator==(const PhaseShifter&) const = default;
};

// a+ -> sqrt(t) a+ + i sqrt(1-t) b+,  b+ -> i sqrt(1-t) a+ + sqrt(t) b+.
struct BeamSplitter {
  std::string first;
  std::string second;
  double transmissivity = 0.5;

  bool operator==(const BeamSplitter&) const = default;
};

struct ModeSwap {
  std::string first;
  std::string second;

  bool operator==(const ModeSwap&) const = default;
};

// Beam splitter of transmissivity `efficiency` into a hidden vacuum mode.
struct LossChannel {
  std::string mode;
  std::string loss_mode;
  double efficiency = 1.0;

  bool operator==(const LossChannel&) const = default;
};

// Classical-pump pair source: sum_{j<=order} (gain e^{i pump_phase} a+ b+)^j / j!.
struct PairSourcePerturbative {
  std::string mode_a;
  std::string mode_b;
  double gain = 0.1;
  PhaseExpr pump_phase;
  int order = 2;

  bool operator==(const PairSourcePerturbative&) const = default;
};

// Quantized single-pump-photon SPDC: a rotation by sqrt((na+1)(nb+1)) * gain
// between |1,na,nb> and |0,na+1,nb+1>.
struct PairSourceExactSPDC {
  std::string pump;
  std::string mode_a;
  std::string mode_b;
  double gain = 0.25;

  bool operator==(const PairSourceExactSPDC&) const = default;
};

using Element = std::variant<PhaseShifter, BeamSplitter, ModeSwap, LossChannel,
                             PairSourcePerturbative, PairSourceExactSPDC>;

std::string_view element_type_name(const Element& element);
// Labels of every mode the element touches.
std::vector<std::string> element_modes(const Element& element);
// Parameter names referenced by the element's phase expressions.
std::vector<std::string> element_parameters(const Element& element);
// Checks parameter ranges and mode references against a registry. Throws
// EvolutionError.
void validate_element(const Element& element, const ModeRegistry& registry);

StateVector apply_phase(const StateVector& state, const PhaseShifter& element,
                        const Bindings& bindings = {});
StateVector apply_beamsplitter(const StateVector& state, const BeamSplitter& element);
StateVector apply_swap(const StateVector& state, const ModeSwap& element);
StateVector apply_loss(const StateVector& state, const LossChannel& element);
StateVector apply_pair_source_perturbative(const StateVector& state,
                                           const PairSourcePerturbative& element,
                                           const Bindings& bindings = {});
StateVector apply_pair_source_exact(const StateVector& state,
                                    const PairSourceExactSPDC& element);

StateVector apply_element(const StateVector& state, const Element& element,
                          const Bindings& bindings = {});

// True for elements whose action is unitary on the untruncated space.
bool is_unitary(const Element& element);

}  // namespace pathid
