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

#include "pathid/circuit.hpp"

#include <algorithm>
#include <set>

#include "pathid/errors.hpp"

namespace pathid {

std::string_view to_string(SourceModel model) {
  return model == SourceModel::kExact ? "exact" : "perturbative";
}

SourceModel source_model_from_string(std::string_view text) {
  if (text == "perturbative") return SourceModel::kPerturbative;
  if (text == "exact") return SourceModel::kExact;
  throw EvolutionError("unknown source model '" + std::string(text) + "'");
}

Circuit::Circuit(RegistryPtr registry, std::vector<Element> elements,
                 std::vector<std::string> parameters, SourceModel model, double gain)
    : registry_(std::move(registry)),
      elements_(std::move(elements)),
      parameters_(std::move(parameters)),
      model_(model),
      gain_(gain) {
  if (!registry_) throw EvolutionError("circuit requires a mode registry");

  std::set<std::string, std::less<>> declared;
  for (const auto& name : parameters_) {
    if (name.empty()) throw EvolutionError("parameter names must be non-empty");
    if (!declared.insert(name).second) {
      throw EvolutionError("parameter '" + name + "' declared twice");
    }
  }

  std::set<std::string, std::less<>> used;
  for (const auto& element : elements_) {
    validate_element(element, *registry_);
    if (model_ == SourceModel::kPerturbative &&
        std::holds_alternative<PairSourceExactSPDC>(element)) {
      throw EvolutionError("spdc element in a perturbative-model circuit");
    }
    if (model_ == SourceModel::kExact &&
        std::holds_alternative<PairSourcePerturbative>(element)) {
      throw EvolutionError("perturbative source in an exact-model circuit");
    }
    for (auto& name : element_parameters(element)) {
      if (!declared.contains(name)) {
        throw EvolutionError("element " + std::string(element_type_name(element)) +
                             " references undeclared parameter '" + name + "'");
      }
      used.insert(std::move(name));
    }
  }
  for (const auto& name : parameters_) {
    if (!used.contains(name)) {
      throw EvolutionError("parameter '" + name + "' is not referenced by any element");
    }
  }
}

bool Circuit::has_parameter(std::string_view name) const {
  return std::find(parameters_.begin(), parameters_.end(), name) != parameters_.end();
}

void Circuit::require_bound(const Bindings& bindings) const {
  for (const auto& name : parameters_) {
    if (!bindings.contains(name)) throw EvolutionError("unbound parameter '" + name + "'");
  }
}

Circuit Circuit::with_elements(std::vector<Element> elements) const {
  return Circuit(registry_, std::move(elements), parameters_, model_, gain_);
}

}  // namespace pathid
