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

#include "pathid/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "pathid/errors.hpp"

namespace pathid {

EvolveResult evolve(const Circuit& circuit, const FockState& input, const Bindings& bindings,
                    const EvolveOptions& options) {
  if (input.size() != circuit.registry().size()) {
    throw EvolutionError("input " + input.to_string() + " has " +
                         std::to_string(input.size()) + " modes, circuit has " +
                         std::to_string(circuit.registry().size()));
  }
  if (input.total() > options.policy.max_photons) {
    throw EvolutionError("input " + input.to_string() + " exceeds max_photons=" +
                         std::to_string(options.policy.max_photons));
  }
  return evolve(circuit, new_state(circuit.registry_ptr(), input, options.policy), bindings,
                options);
}

EvolveResult evolve(const Circuit& circuit, const StateVector& input,
                    const Bindings& bindings, const EvolveOptions& options) {
  if (!(input.registry() == circuit.registry())) {
    throw EvolutionError("input state registry does not match the circuit");
  }
  circuit.require_bound(bindings);

  const TruncationReport before = input.truncation();
  StateVector state = input;
  for (const auto& element : circuit.elements()) {
    state = apply_element(state, element, bindings);
  }
  state = prune(state);

  TruncationReport leak;
  leak.dropped_terms = state.truncation().dropped_terms - before.dropped_terms;
  leak.leaked_norm2 = state.truncation().leaked_norm2 - before.leaked_norm2;

  std::vector<std::string> warnings;
  if (leak.leaked_norm2 > options.leak_warning_threshold) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "truncation leaked norm^2 %.3e across %zu basis states (max_photons=%d)",
                  leak.leaked_norm2, leak.dropped_terms, options.policy.max_photons);
    warnings.emplace_back(buf);
  }
  return EvolveResult{std::move(state), leak, std::move(warnings)};
}

void SweepSpec::validate() const {
  if (parameter.empty()) throw EvolutionError("sweep parameter name is empty");
  if (points < 2) throw EvolutionError("sweep needs at least 2 points");
  if (!(start < stop)) throw EvolutionError("sweep needs start < stop");
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(points));
  const double steps = include_stop ? points - 1 : points;
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = start + (stop - start) * (i / steps);
  }
  return out;
}

std::vector<SweepPoint> sweep(const Circuit& circuit, const FockState& input,
                              const SweepSpec& spec, const EvolveOptions& options,
                              unsigned threads) {
  spec.validate();
  if (!circuit.has_parameter(spec.parameter)) {
    throw EvolutionError("sweep parameter '" + spec.parameter +
                         "' is not a circuit parameter");
  }
  const std::vector<double> values = spec.values();
  std::vector<std::optional<SweepPoint>> slots(values.size());

  auto run_point = [&](std::size_t i) {
    Bindings bindings = spec.fixed;
    bindings[spec.parameter] = values[i];
    slots[i] = SweepPoint{values[i], evolve(circuit, input, bindings, options)};
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(values.size()));

  if (threads <= 1) {
    for (std::size_t i = 0; i < values.size(); ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < values.size(); i = next++) {
          try {
            run_point(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<SweepPoint> out;
  out.reserve(values.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace pathid
