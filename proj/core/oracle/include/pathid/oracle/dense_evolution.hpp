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

#include <cstddef>
#include <map>
#include <vector>

#include "pathid/circuit.hpp"
#include "pathid/elements.hpp"
#include "pathid/fock.hpp"

namespace pathid::oracle {

// Reference evolution on the full Fock basis with total photon number at most
// max_photons. Every element becomes a dense matrix built from its generator:
//   beamsplitter, loss   exp(i s (a^dag b + b^dag a)), t = cos^2 s
//   phase                exp(i theta n)
//   swap                 the mode permutation
//   spdc                 exp(g (s^- a^dag b^dag - s^+ a b)), pump as a two-level system
//   source               sum_{j<=order} (g e^{i phi} a^dag b^dag)^j / j!
// Couplings that leave the truncated basis are dropped, so results are exact
// only when max_photons bounds the photon number reachable from the input.
class DenseEvolution {
 public:
  DenseEvolution(const ModeRegistry& registry, int max_photons);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<FockState>& basis() const { return basis_; }

  // Row-major dense matrix of one element.
  std::vector<Amplitude> element_matrix(const Element& element, const Bindings& bindings) const;

  std::map<FockState, Amplitude> evolve(const Circuit& circuit, const FockState& input,
                                        const Bindings& bindings) const;

 private:
  ModeRegistry registry_;
  int max_photons_;
  std::vector<FockState> basis_;
  std::map<FockState, std::size_t> index_;
};

// Largest |dense - sparse| over the union of both supports.
double max_deviation(const std::map<FockState, Amplitude>& dense, const StateVector& sparse);

}  // namespace pathid::oracle
