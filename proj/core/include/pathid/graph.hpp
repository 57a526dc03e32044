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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathid/circuit.hpp"
#include "pathid/elements.hpp"
#include "pathid/fock.hpp"

namespace pathid {

using Weight = std::complex<double>;

struct GraphEdge {
  std::string u;
  std::string v;
  Weight weight;
};

// Undirected graph on detector-path labels. Edge weights are pair-creation
// amplitudes in units of the source gain g. Vertices and edges are kept in
// sorted order; each edge has u < v.
class WeightedGraph {
 public:
  // Throws GraphError on duplicate vertices, unknown endpoints, self-loops,
  // repeated edges or non-finite weights.
  WeightedGraph(std::vector<std::string> vertices, std::vector<GraphEdge> edges);

  // Same, but repeated edges are merged by summing their weights.
  static WeightedGraph collapse(std::vector<std::string> vertices,
                                const std::vector<GraphEdge>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::optional<Weight> weight(std::string_view u, std::string_view v) const;

  WeightedGraph with_edge_weight(std::size_t edge, Weight weight) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
};

// Canonical outcome label for a vertex pair: "ab" for single-character
// labels, "left|right" otherwise, always in sorted order.
std::string pair_label(std::string_view u, std::string_view v);

// Indices into graph.edges().
using Matching = std::vector<std::size_t>;

inline constexpr std::size_t kMaxMatchingVertices = 8;

// Lexicographic order: the lowest uncovered vertex is paired first, with its
// partners tried in sorted order. The empty graph has one (empty) matching.
// Throws GraphError on an odd vertex count or more than kMaxMatchingVertices
// vertices.
std::vector<Matching> perfect_matchings(const WeightedGraph& graph);

// Sum over perfect matchings of the product of their edge weights.
Weight matching_sum(const WeightedGraph& graph);

// Four-fold coincidence amplitude. Throws GraphError unless there are exactly
// four vertices.
Weight quad_amplitude(const WeightedGraph& graph);

// First-order amplitude of every edge's pair outcome, keyed by pair_label.
std::map<std::string, Weight> pair_amplitudes(const WeightedGraph& graph);

struct MatchingDistribution {
  std::map<std::string, double> probabilities;
  bool normalized = false;
};

// Throws GraphError when every amplitude vanishes.
MatchingDistribution normalized_distribution(const std::map<std::string, Weight>& amplitudes);

// Throws GraphError when the outcome sets differ or either input is not a
// normalized distribution.
double fidelity(const MatchingDistribution& p, const MatchingDistribution& q);

struct CrosscheckReport {
  // L-infinity distance of the normalized pair distributions.
  double pair_deviation = 0.0;
  // ||engine pair amplitude| / g - |graph pair amplitude||, worst outcome.
  // Moduli only: per-outcome phases depend on the splitter convention.
  double pair_amplitude_deviation = 0.0;
  // |engine <1111> / g^2 - quad_amplitude(graph)|; set only for four detector
  // vertices and circuits without a partial beam splitter, where the matching
  // picture holds without two-photon interference at the splitter.
  std::optional<double> quad_deviation;
  MatchingDistribution graph_distribution;
  MatchingDistribution engine_distribution;

  double max_deviation() const;
};

// Evolves the circuit from vacuum, post-selects every two-detector coincidence
// and compares against the graph. Graph vertices must be detector modes of
// the circuit.
CrosscheckReport graph_vs_engine_crosscheck(const WeightedGraph& graph, const Circuit& circuit,
                                            const Bindings& bindings);

}  // namespace pathid
