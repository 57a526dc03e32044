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
#include <string_view>
#include <vector>

#include "pathid/elements.hpp"
#include "pathid/fock.hpp"

namespace pathid {

enum class SourceModel { kPerturbative, kExact };

std::string_view to_string(SourceModel model);
SourceModel source_model_from_string(std::string_view text);

// Ordered, feed-forward element list over a frozen registry. Elements acting
// on disjoint modes commute, so a sequence covers every layout we need.
class Circuit {
 public:
  // Throws EvolutionError when an element references an unknown mode, a
  // parameter is declared twice, declared but unused, used but undeclared, or
  // a source does not match the selected model.
  Circuit(RegistryPtr registry, std::vector<Element> elements,
          std::vector<std::string> parameters,
          SourceModel model = SourceModel::kPerturbative, double gain = 0.1);

  const ModeRegistry& registry() const { return *registry_; }
  const RegistryPtr& registry_ptr() const { return registry_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  SourceModel model() const { return model_; }
  // Nominal per-source gain the circuit was built with.
  double gain() const { return gain_; }

  bool has_parameter(std::string_view name) const;
  // Throws EvolutionError naming the first unbound parameter.
  void require_bound(const Bindings& bindings) const;

  Circuit with_elements(std::vector<Element> elements) const;

 private:
  RegistryPtr registry_;
  std::vector<Element> elements_;
  std::vector<std::string> parameters_;
  SourceModel model_;
  double gain_;
};

}  // namespace pathid
