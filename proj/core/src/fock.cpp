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

#include "pathid/fock.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "pathid/errors.hpp"

namespace pathid {

std::string_view to_string(ModeKind kind) {
  switch (kind) {
    case ModeKind::kDetector:
      return "detector";
    case ModeKind::kPump:
      return "pump";
    case ModeKind::kLoss:
      return "loss";
  }
  return "detector";
}

ModeKind mode_kind_from_string(std::string_view text) {
  if (text == "detector") return ModeKind::kDetector;
  if (text == "pump") return ModeKind::kPump;
  if (text == "loss") return ModeKind::kLoss;
  throw StateError("unknown mode kind '" + std::string(text) + "'");
}

ModeRegistry::ModeRegistry(std::vector<ModeInfo> modes) : modes_(std::move(modes)) {
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i].label.empty()) {
      throw StateError("mode labels must be non-empty");
    }
    if (!index_.emplace(modes_[i].label, i).second) {
      throw StateError("duplicate mode label '" + modes_[i].label + "'");
    }
  }
}

std::shared_ptr<const ModeRegistry> ModeRegistry::make(std::vector<ModeInfo> modes) {
  return std::make_shared<const ModeRegistry>(std::move(modes));
}

std::shared_ptr<const ModeRegistry> ModeRegistry::detectors(
    const std::vector<std::string>& labels) {
  std::vector<ModeInfo> modes;
  modes.reserve(labels.size());
  for (const auto& label : labels) modes.push_back({label, ModeKind::kDetector});
  return make(std::move(modes));
}

const std::string& ModeRegistry::label(std::size_t index) const {
  return modes_.at(index).label;
}

ModeKind ModeRegistry::kind(std::size_t index) const { return modes_.at(index).kind; }

std::size_t ModeRegistry::index(std::string_view label) const {
  if (auto found = find(label)) return *found;
  throw StateError("unknown mode '" + std::string(label) + "'");
}

std::optional<std::size_t> ModeRegistry::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> ModeRegistry::indices_of_kind(ModeKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i].kind == kind) out.push_back(i);
  }
  return out;
}

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
  for (int n : occupations_) {
    if (n < 0) throw StateError("negative occupation in Fock state");
    total_ += n;
  }
}

FockState FockState::with(std::size_t mode, int count) const {
  std::vector<int> occ = occupations_;
  occ.at(mode) = count;
  return FockState(std::move(occ));
}

FockState FockState::shifted(std::size_t mode, int delta) const {
  return with(mode, occupations_.at(mode) + delta);
}

std::string FockState::to_string() const {
  std::ostringstream out;
  out << '|';
  for (std::size_t i = 0; i < occupations_.size(); ++i) {
    if (i) out << ',';
    out << occupations_[i];
  }
  out << '>';
  return out.str();
}

StateVector::StateVector(RegistryPtr registry, TruncationPolicy policy)
    : registry_(std::move(registry)), policy_(policy) {
  if (!registry_) throw StateError("state requires a mode registry");
  if (policy_.max_photons < 0) throw StateError("max_photons must be >= 0");
  if (!(policy_.prune_threshold >= 0.0)) throw StateError("prune threshold must be >= 0");
}

StateVector StateVector::from_amplitudes(
    RegistryPtr registry, TruncationPolicy policy,
    const std::vector<std::pair<FockState, Amplitude>>& entries) {
  StateVector state(std::move(registry), policy);
  for (const auto& [basis, amp] : entries) {
    if (basis.size() != state.registry().size()) {
      throw StateError("Fock state " + basis.to_string() + " has " +
                       std::to_string(basis.size()) + " modes, registry has " +
                       std::to_string(state.registry().size()));
    }
    if (basis.total() > policy.max_photons) {
      throw StateError("Fock state " + basis.to_string() + " exceeds max_photons=" +
                       std::to_string(policy.max_photons));
    }
    state.amplitudes_[basis] += amp;
  }
  return state;
}

Amplitude StateVector::amplitude(const FockState& basis) const {
  auto it = amplitudes_.find(basis);
  return it == amplitudes_.end() ? Amplitude{} : it->second;
}

StateVector StateVector::with_amplitudes(Map amplitudes) const {
  StateVector out(registry_, policy_);
  out.truncation_ = truncation_;
  out.amplitudes_ = std::move(amplitudes);
  return out;
}

StateVector StateVector::with_truncation(TruncationReport report) const {
  StateVector out = *this;
  out.truncation_ = report;
  return out;
}

StateAccumulator::StateAccumulator(const StateVector& like) : like_(like) {}

void StateAccumulator::add(const FockState& basis, Amplitude amplitude) {
  if (basis.total() > like_.policy().max_photons) {
    dropped_[basis] += amplitude;
    return;
  }
  out_[basis] += amplitude;
}

StateVector StateAccumulator::finish() && {
  const double threshold = like_.policy().prune_threshold;
  std::erase_if(out_, [threshold](const auto& entry) {
    return std::abs(entry.second) < threshold;
  });
  TruncationReport report = like_.truncation();
  for (const auto& [basis, amp] : dropped_) {
    (void)basis;
    if (amp == Amplitude{}) continue;
    report.dropped_terms += 1;
    report.leaked_norm2 += std::norm(amp);
  }
  return like_.with_amplitudes(std::move(out_)).with_truncation(report);
}

StateVector new_state(RegistryPtr registry, const FockState& initial,
                      TruncationPolicy policy) {
  return StateVector::from_amplitudes(std::move(registry), policy, {{initial, 1.0}});
}

StateVector apply_creation(const StateVector& state, std::string_view mode) {
  const std::size_t m = state.registry().index(mode);
  StateAccumulator acc(state);
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int n = basis[m];
    acc.add(basis.shifted(m, +1), amp * std::sqrt(static_cast<double>(n + 1)));
  }
  return std::move(acc).finish();
}

StateVector apply_annihilation(const StateVector& state, std::string_view mode) {
  const std::size_t m = state.registry().index(mode);
  StateAccumulator acc(state);
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int n = basis[m];
    if (n == 0) continue;
    acc.add(basis.shifted(m, -1), amp * std::sqrt(static_cast<double>(n)));
  }
  return std::move(acc).finish();
}

double norm2(const StateVector& state) {
  double total = 0.0;
  for (const auto& [basis, amp] : state.amplitudes()) total += std::norm(amp);
  return total;
}

StateVector normalize(const StateVector& state) {
  const double n2 = norm2(state);
  if (n2 == 0.0) throw StateError("cannot normalize the zero vector");
  const double scale = 1.0 / std::sqrt(n2);
  StateVector::Map out;
  for (const auto& [basis, amp] : state.amplitudes()) out.emplace(basis, amp * scale);
  return state.with_amplitudes(std::move(out));
}

Amplitude inner(const StateVector& bra, const StateVector& ket) {
  if (!(bra.registry() == ket.registry())) {
    throw StateError("inner product of states over different registries");
  }
  Amplitude total{};
  const auto& small = bra.size() <= ket.size() ? bra : ket;
  const auto& large = bra.size() <= ket.size() ? ket : bra;
  for (const auto& [basis, amp] : small.amplitudes()) {
    const Amplitude other = large.amplitude(basis);
    if (other == Amplitude{}) continue;
    total += (&small == &bra) ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return total;
}

StateVector prune(const StateVector& state) {
  const double threshold = state.policy().prune_threshold;
  StateVector::Map out;
  for (const auto& [basis, amp] : state.amplitudes()) {
    if (std::abs(amp) >= threshold) out.emplace(basis, amp);
  }
  return state.with_amplitudes(std::move(out));
}

}  // namespace pathid

std::size_t std::hash<pathid::FockState>::operator()(
    const pathid::FockState& state) const noexcept {
  // FNV-1a over the occupation vector.
  std::size_t h = 1469598103934665603ull;
  for (int n : state.occupations()) {
    h ^= static_cast<std::size_t>(n) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  h ^= state.size();
  return h;
}
