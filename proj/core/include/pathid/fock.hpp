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

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathid {

using Amplitude = std::complex<double>;

// Detector modes are the ones photon-counting patterns talk about by default;
// pump modes carry quantized pump photons; loss modes are the hidden partners
// of loss channels and are always marginalized at detection.
enum class ModeKind { kDetector, kPump, kLoss };

std::string_view to_string(ModeKind kind);
ModeKind mode_kind_from_string(std::string_view text);

struct ModeInfo {
  std::string label;
  ModeKind kind = ModeKind::kDetector;

  bool operator==(const ModeInfo&) const = default;
};

// Ordered set of labeled modes. Immutable once built, so any circuit or state
// holding it sees a frozen ordering.
class ModeRegistry {
 public:
  explicit ModeRegistry(std::vector<ModeInfo> modes);

  static std::shared_ptr<const ModeRegistry> make(std::vector<ModeInfo> modes);
  // All labels as detector modes.
  static std::shared_ptr<const ModeRegistry> detectors(
      const std::vector<std::string>& labels);

  std::size_t size() const { return modes_.size(); }
  const std::vector<ModeInfo>& modes() const { return modes_; }
  const std::string& label(std::size_t index) const;
  ModeKind kind(std::size_t index) const;

  // Throws StateError for unknown labels.
  std::size_t index(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  std::vector<std::size_t> indices_of_kind(ModeKind kind) const;

  bool operator==(const ModeRegistry& other) const { return modes_ == other.modes_; }

 private:
  std::vector<ModeInfo> modes_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

// Occupation-number basis state. Ordering, equality and hashing are all by the
// exact occupation vector.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occupations);
  FockState(std::initializer_list<int> occupations)
      : FockState(std::vector<int>(occupations)) {}

  std::size_t size() const { return occupations_.size(); }
  int operator[](std::size_t mode) const { return occupations_[mode]; }
  std::span<const int> occupations() const { return occupations_; }
  int total() const { return total_; }

  FockState with(std::size_t mode, int count) const;
  FockState shifted(std::size_t mode, int delta) const;

  // "|1,0,2>"
  std::string to_string() const;

  auto operator<=>(const FockState& other) const {
    return occupations_ <=> other.occupations_;
  }
  bool operator==(const FockState& other) const {
    return occupations_ == other.occupations_;
  }

 private:
  std::vector<int> occupations_;
  int total_ = 0;
};

struct TruncationPolicy {
  int max_photons = 6;
  double prune_threshold = 1e-12;
};

// Amplitude that left the truncated space through creation past max_photons.
struct TruncationReport {
  std::size_t dropped_terms = 0;
  double leaked_norm2 = 0.0;

  TruncationReport& operator+=(const TruncationReport& other) {
    dropped_terms += other.dropped_terms;
    leaked_norm2 += other.leaked_norm2;
    return *this;
  }
};

// Sparse superposition of Fock states over one registry. Iteration is sorted
// by occupation vector. Values are never mutated after construction; every
// operation below returns a new state.
class StateVector {
 public:
  using Map = std::map<FockState, Amplitude>;

  // Zero vector.
  StateVector(RegistryPtr registry, TruncationPolicy policy = {});

  // Builds a state from explicit entries. Duplicate basis states add up.
  // Throws StateError on length mismatch or photons above the cap.
  static StateVector from_amplitudes(
      RegistryPtr registry, TruncationPolicy policy,
      const std::vector<std::pair<FockState, Amplitude>>& entries);

  const ModeRegistry& registry() const { return *registry_; }
  const RegistryPtr& registry_ptr() const { return registry_; }
  const TruncationPolicy& policy() const { return policy_; }
  const TruncationReport& truncation() const { return truncation_; }

  const Map& amplitudes() const { return amplitudes_; }
  Amplitude amplitude(const FockState& basis) const;
  std::size_t size() const { return amplitudes_.size(); }
  bool empty() const { return amplitudes_.empty(); }

  // Same registry, policy and truncation history, different amplitudes.
  StateVector with_amplitudes(Map amplitudes) const;
  StateVector with_truncation(TruncationReport report) const;

 private:
  RegistryPtr registry_;
  TruncationPolicy policy_;
  TruncationReport truncation_;
  Map amplitudes_;
};

// Collects the output of a basis-state-by-basis-state linear map. Entries past
// the photon cap are dropped and their norm is booked as leak; entries below
// the prune threshold are removed on finish().
class StateAccumulator {
 public:
  explicit StateAccumulator(const StateVector& like);

  const ModeRegistry& registry() const { return *like_.registry_ptr(); }
  int max_photons() const { return like_.policy().max_photons; }

  void add(const FockState& basis, Amplitude amplitude);
  StateVector finish() &&;

 private:
  const StateVector& like_;
  StateVector::Map out_;
  StateVector::Map dropped_;
};

StateVector new_state(RegistryPtr registry, const FockState& initial,
                      TruncationPolicy policy = {});

StateVector apply_creation(const StateVector& state, std::string_view mode);
StateVector apply_annihilation(const StateVector& state, std::string_view mode);

double norm2(const StateVector& state);
// Throws StateError on the zero vector.
StateVector normalize(const StateVector& state);
// Conjugate-linear in the first argument. Throws StateError when the
// registries differ.
Amplitude inner(const StateVector& bra, const StateVector& ket);
StateVector prune(const StateVector& state);

}  // namespace pathid

template <>
struct std::hash<pathid::FockState> {
  std::size_t operator()(const pathid::FockState& state) const noexcept;
};
