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

#include "pathid/elements.hpp"

#include <algorithm>
#include <cmath>

#include "pathid/errors.hpp"

namespace pathid {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double factorial(int n) {
  double out = 1.0;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

std::size_t resolve(const ModeRegistry& registry, const std::string& label,
                    std::string_view element) {
  if (auto found = registry.find(label)) return *found;
  throw EvolutionError(std::string(element) + ": unknown mode '" + label + "'");
}

void require_distinct(const std::string& a, const std::string& b, std::string_view element) {
  if (a == b) {
    throw EvolutionError(std::string(element) + ": modes must differ (got '" + a +
                         "' twice)");
  }
}

// Applies the two-mode transform a+ -> u00 a+ + u10 b+, b+ -> u01 a+ + u11 b+
// basis state by basis state.
StateVector apply_two_mode_linear(const StateVector& state, std::size_t m1, std::size_t m2,
                                  double transmissivity) {
  const double tau = std::sqrt(transmissivity);
  const Amplitude refl(0.0, std::sqrt(1.0 - transmissivity));
  StateAccumulator acc(state);
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int n1 = basis[m1];
    const int n2 = basis[m2];
    if (n1 == 0 && n2 == 0) {
      acc.add(basis, amp);
      continue;
    }
    const double input_norm = std::sqrt(factorial(n1) * factorial(n2));
    for (int k = 0; k <= n1; ++k) {      // photons of mode 1 that stay
      for (int l = 0; l <= n2; ++l) {    // photons of mode 2 that stay
        const int out1 = k + (n2 - l);
        const int out2 = (n1 - k) + l;
        const Amplitude coef = binomial(n1, k) * binomial(n2, l) * std::pow(tau, k + l) *
                               std::pow(refl, (n1 - k) + (n2 - l)) *
                               std::sqrt(factorial(out1) * factorial(out2)) / input_norm;
        if (coef == Amplitude{}) continue;
        acc.add(basis.with(m1, out1).with(m2, out2), amp * coef);
      }
    }
  }
  return std::move(acc).finish();
}

}  // namespace

PhaseExpr PhaseExpr::parameter(std::string name, double coefficient, double offset) {
  PhaseExpr expr(offset);
  expr.terms.emplace_back(std::move(name), coefficient);
  return expr;
}

PhaseExpr& PhaseExpr::plus(std::string name, double coefficient) {
  terms.emplace_back(std::move(name), coefficient);
  return *this;
}

double PhaseExpr::evaluate(const Bindings& bindings) const {
  double value = constant;
  for (const auto& [name, coefficient] : terms) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      throw EvolutionError("unbound parameter '" + name + "'");
    }
    value += coefficient * it->second;
  }
  return value;
}

std::string_view element_type_name(const Element& element) {
  return std::visit(Overloaded{
                        [](const PhaseShifter&) { return std::string_view("phase"); },
                        [](const BeamSplitter&) { return std::string_view("beamsplitter"); },
                        [](const ModeSwap&) { return std::string_view("swap"); },
                        [](const LossChannel&) { return std::string_view("loss"); },
                        [](const PairSourcePerturbative&) { return std::string_view("source"); },
                        [](const PairSourceExactSPDC&) { return std::string_view("spdc"); },
                    },
                    element);
}

std::vector<std::string> element_modes(const Element& element) {
  return std::visit(
      Overloaded{
          [](const PhaseShifter& e) { return std::vector<std::string>{e.mode}; },
          [](const BeamSplitter& e) { return std::vector<std::string>{e.first, e.second}; },
          [](const ModeSwap& e) { return std::vector<std::string>{e.first, e.second}; },
          [](const LossChannel& e) { return std::vector<std::string>{e.mode, e.loss_mode}; },
          [](const PairSourcePerturbative& e) {
            return std::vector<std::string>{e.mode_a, e.mode_b};
          },
          [](const PairSourceExactSPDC& e) {
            return std::vector<std::string>{e.pump, e.mode_a, e.mode_b};
          },
      },
      element);
}

std::vector<std::string> element_parameters(const Element& element) {
  const PhaseExpr* expr = nullptr;
  if (auto* p = std::get_if<PhaseShifter>(&element)) expr = &p->phase;
  if (auto* s = std::get_if<PairSourcePerturbative>(&element)) expr = &s->pump_phase;
  std::vector<std::string> names;
  if (expr) {
    for (const auto& [name, coefficient] : expr->terms) names.push_back(name);
  }
  return names;
}

void validate_element(const Element& element, const ModeRegistry& registry) {
  const std::string type(element_type_name(element));
  for (const auto& label : element_modes(element)) resolve(registry, label, type);
  std::visit(
      Overloaded{
          [](const PhaseShifter&) {},
          [&](const BeamSplitter& e) {
            require_distinct(e.first, e.second, type);
            if (!(e.transmissivity >= 0.0 && e.transmissivity <= 1.0)) {
              throw EvolutionError("beamsplitter: transmissivity must lie in [0,1]");
            }
          },
          [&](const ModeSwap& e) { require_distinct(e.first, e.second, type); },
          [&](const LossChannel& e) {
            require_distinct(e.mode, e.loss_mode, type);
            if (!(e.efficiency > 0.0 && e.efficiency <= 1.0)) {
              throw EvolutionError("loss: efficiency must lie in (0,1]");
            }
          },
          [&](const PairSourcePerturbative& e) {
            require_distinct(e.mode_a, e.mode_b, type);
            if (e.order < 1) throw EvolutionError("source: order must be >= 1");
            if (!std::isfinite(e.gain)) throw EvolutionError("source: gain must be finite");
          },
          [&](const PairSourceExactSPDC& e) {
            require_distinct(e.mode_a, e.mode_b, type);
            require_distinct(e.pump, e.mode_a, type);
            require_distinct(e.pump, e.mode_b, type);
            if (!std::isfinite(e.gain)) throw EvolutionError("spdc: gain must be finite");
          },
      },
      element);
}

StateVector apply_phase(const StateVector& state, const PhaseShifter& element,
                        const Bindings& bindings) {
  const std::size_t m = resolve(state.registry(), element.mode, "phase");
  const double theta = element.phase.evaluate(bindings);
  StateVector::Map out;
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int n = basis[m];
    out.emplace(basis, n == 0 ? amp : amp * std::polar(1.0, n * theta));
  }
  return state.with_amplitudes(std::move(out));
}

StateVector apply_beamsplitter(const StateVector& state, const BeamSplitter& element) {
  validate_element(element, state.registry());
  return apply_two_mode_linear(state, state.registry().index(element.first),
                               state.registry().index(element.second),
                               element.transmissivity);
}

StateVector apply_swap(const StateVector& state, const ModeSwap& element) {
  validate_element(element, state.registry());
  const std::size_t m1 = state.registry().index(element.first);
  const std::size_t m2 = state.registry().index(element.second);
  StateVector::Map out;
  for (const auto& [basis, amp] : state.amplitudes()) {
    out.emplace(basis.with(m1, basis[m2]).with(m2, basis[m1]), amp);
  }
  return state.with_amplitudes(std::move(out));
}

StateVector apply_loss(const StateVector& state, const LossChannel& element) {
  validate_element(element, state.registry());
  const std::size_t signal = state.registry().index(element.mode);
  const std::size_t hidden = state.registry().index(element.loss_mode);
  for (const auto& [basis, amp] : state.amplitudes()) {
    (void)amp;
    if (basis[hidden] != 0) {
      throw EvolutionError("loss: hidden mode '" + element.loss_mode +
                           "' must be vacuum before the channel");
    }
  }
  return apply_two_mode_linear(state, signal, hidden, element.efficiency);
}

StateVector apply_pair_source_perturbative(const StateVector& state,
                                           const PairSourcePerturbative& element,
                                           const Bindings& bindings) {
  validate_element(element, state.registry());
  const std::size_t ma = state.registry().index(element.mode_a);
  const std::size_t mb = state.registry().index(element.mode_b);
  const Amplitude gain = std::polar(element.gain, element.pump_phase.evaluate(bindings));
  StateAccumulator acc(state);
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int na = basis[ma];
    const int nb = basis[mb];
    acc.add(basis, amp);
    // (g a+ b+)^j / j! acting on |na, nb>.
    Amplitude term = amp;
    for (int j = 1; j <= element.order; ++j) {
      term *= gain * std::sqrt(static_cast<double>((na + j) * (nb + j))) /
              static_cast<double>(j);
      acc.add(basis.with(ma, na + j).with(mb, nb + j), term);
    }
  }
  return std::move(acc).finish();
}

StateVector apply_pair_source_exact(const StateVector& state,
                                    const PairSourceExactSPDC& element) {
  validate_element(element, state.registry());
  const std::size_t mp = state.registry().index(element.pump);
  const std::size_t ma = state.registry().index(element.mode_a);
  const std::size_t mb = state.registry().index(element.mode_b);
  const double g = element.gain;
  StateAccumulator acc(state);
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int np = basis[mp];
    const int na = basis[ma];
    const int nb = basis[mb];
    if (np > 1) {
      throw EvolutionError("spdc: pump mode '" + element.pump + "' holds " +
                           std::to_string(np) + " photons in " + basis.to_string() +
                           "; at most one is supported");
    }
    if (np == 1) {
      const double angle = std::sqrt(static_cast<double>((na + 1) * (nb + 1))) * g;
      acc.add(basis, amp * std::cos(angle));
      acc.add(basis.with(mp, 0).with(ma, na + 1).with(mb, nb + 1), amp * std::sin(angle));
    } else {
      const double angle = std::sqrt(static_cast<double>(na * nb)) * g;
      acc.add(basis, amp * std::cos(angle));
      if (na > 0 && nb > 0) {
        acc.add(basis.with(mp, 1).with(ma, na - 1).with(mb, nb - 1), -amp * std::sin(angle));
      }
    }
  }
  return std::move(acc).finish();
}

StateVector apply_element(const StateVector& state, const Element& element,
                          const Bindings& bindings) {
  return std::visit(
      Overloaded{
          [&](const PhaseShifter& e) { return apply_phase(state, e, bindings); },
          [&](const BeamSplitter& e) { return apply_beamsplitter(state, e); },
          [&](const ModeSwap& e) { return apply_swap(state, e); },
          [&](const LossChannel& e) { return apply_loss(state, e); },
          [&](const PairSourcePerturbative& e) {
            return apply_pair_source_perturbative(state, e, bindings);
          },
          [&](const PairSourceExactSPDC& e) { return apply_pair_source_exact(state, e); },
      },
      element);
}

bool is_unitary(const Element& element) {
  return !std::holds_alternative<PairSourcePerturbative>(element);
}

}  // namespace pathid
