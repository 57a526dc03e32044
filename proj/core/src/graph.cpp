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


#include "pathid/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <variant>

#include "pathid/detection.hpp"
#include "pathid/engine.hpp"
#include "pathid/errors.hpp"

namespace pathid {
namespace {

bool finite(Weight w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); }

GraphEdge oriented(GraphEdge edge) {
  if (edge.v < edge.u) std::swap(edge.u, edge.v);
  return edge;
}

bool edge_less(const GraphEdge& lhs, const GraphEdge& rhs) {
  return std::tie(lhs.u, lhs.v) < std::tie(rhs.u, rhs.v);
}

std::vector<GraphEdge> checked_edges(const std::vector<std::string>& vertices,
                                     const std::vector<GraphEdge>& edges) {
  const std::set<std::string> known(vertices.begin(), vertices.end());
  std::vector<GraphEdge> out;
  out.reserve(edges.size());
  for (const auto& raw : edges) {
    GraphEdge edge = oriented(raw);
    if (!known.contains(edge.u) || !known.contains(edge.v)) {
      throw GraphError("edge " + edge.u + "-" + edge.v + " references an unknown vertex");
    }
    if (edge.u == edge.v) throw GraphError("self-loop on vertex '" + edge.u + "'");
    if (!finite(edge.weight)) {
      throw GraphError("edge " + edge.u + "-" + edge.v + " has a non-finite weight");
    }
    out.push_back(std::move(edge));
  }
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

std::vector<std::string> checked_vertices(std::vector<std::string> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw GraphError("duplicate vertex label");
  }
  for (const auto& v : vertices) {
    if (v.empty()) throw GraphError("empty vertex label");
  }
  return vertices;
}

bool has_partial_beamsplitter(const Circuit& circuit) {
  for (const auto& element : circuit.elements()) {
    if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
      if (bs->transmissivity > 0.0 && bs->transmissivity < 1.0) return true;
    }
  }
  return false;
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> vertices, std::vector<GraphEdge> edges)
    : vertices_(checked_vertices(std::move(vertices))),
      edges_(checked_edges(vertices_, edges)) {
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw GraphError("repeated edge " + edges_[i].u + "-" + edges_[i].v);
    }
  }
}

WeightedGraph WeightedGraph::collapse(std::vector<std::string> vertices,
                                      const std::vector<GraphEdge>& edges) {
  auto sorted_vertices = checked_vertices(std::move(vertices));
  std::vector<GraphEdge> merged;
  for (auto& edge : checked_edges(sorted_vertices, edges)) {
    if (!merged.empty() && merged.back().u == edge.u && merged.back().v == edge.v) {
      merged.back().weight += edge.weight;
    } else {
      merged.push_back(std::move(edge));
    }
  }
  return WeightedGraph(std::move(sorted_vertices), std::move(merged));
}

std::optional<Weight> WeightedGraph::weight(std::string_view u, std::string_view v) const {
  if (v < u) std::swap(u, v);
  for (const auto& edge : edges_) {
    if (edge.u == u && edge.v == v) return edge.weight;
  }
  return std::nullopt;
}

WeightedGraph WeightedGraph::with_edge_weight(std::size_t edge, Weight weight) const {
  if (edge >= edges_.size()) throw GraphError("edge index out of range");
  auto edges = edges_;
  edges[edge].weight = weight;
  return WeightedGraph(vertices_, std::move(edges));
}

std::string pair_label(std::string_view u, std::string_view v) {
  if (v < u) std::swap(u, v);
  std::string out(u);
  if (u.size() != 1 || v.size() != 1) out += '|';
  out += v;
  return out;
}

std::vector<Matching> perfect_matchings(const WeightedGraph& graph) {
  const auto& vertices = graph.vertices();
  const std::size_t n = vertices.size();
  if (n % 2 != 0) {
    throw GraphError("perfect matchings need an even vertex count, got " + std::to_string(n));
  }
  if (n > kMaxMatchingVertices) {
    throw GraphError("perfect matching enumeration is limited to " +
                     std::to_string(kMaxMatchingVertices) + " vertices");
  }
  // incident[i]: (partner vertex, edge index), partners ascending.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(n);
  auto index_of = [&](const std::string& label) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), label) -
                                    vertices.begin());
  };
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto u = index_of(graph.edges()[e].u);
    const auto v = index_of(graph.edges()[e].v);
    incident[u].emplace_back(v, e);
    incident[v].emplace_back(u, e);
  }
  for (auto& list : incident) std::sort(list.begin(), list.end());

  std::vector<Matching> out;
  std::vector<bool> covered(n, false);
  Matching current;
  std::function<void()> recurse = [&] {
    std::size_t first = 0;
    while (first < n && covered[first]) ++first;
    if (first == n) {
      out.push_back(current);
      return;
    }
    covered[first] = true;
    for (const auto& [partner, edge] : incident[first]) {
      if (covered[partner]) continue;
      covered[partner] = true;
      current.push_back(edge);
      recurse();
      current.pop_back();
      covered[partner] = false;
    }
    covered[first] = false;
  };
  recurse();
  return out;
}

Weight matching_sum(const WeightedGraph& graph) {
  Weight total = 0.0;
  for (const auto& matching : perfect_matchings(graph)) {
    Weight term = 1.0;
    for (std::size_t e : matching) term *= graph.edges()[e].weight;
    total += term;
  }
  return total;
}

Weight quad_amplitude(const WeightedGraph& graph) {
  if (graph.vertices().size() != 4) {
    throw GraphError("quad amplitude needs exactly 4 vertices, got " +
                     std::to_string(graph.vertices().size()));
  }
  return matching_sum(graph);
}

std::map<std::string, Weight> pair_amplitudes(const WeightedGraph& graph) {
  std::map<std::string, Weight> out;
  for (const auto& edge : graph.edges()) out[pair_label(edge.u, edge.v)] += edge.weight;
  return out;
}

MatchingDistribution normalized_distribution(const std::map<std::string, Weight>& amplitudes) {
  double total = 0.0;
  for (const auto& [label, amp] : amplitudes) total += std::norm(amp);
  if (!(total > 0.0)) throw GraphError("cannot normalize an all-zero amplitude set");
  MatchingDistribution out;
  out.normalized = true;
  for (const auto& [label, amp] : amplitudes) out.probabilities[label] = std::norm(amp) / total;
  return out;
}

double fidelity(const MatchingDistribution& p, const MatchingDistribution& q) {
  auto check = [](const MatchingDistribution& d) {
    double total = 0.0;
    for (const auto& [label, prob] : d.probabilities) {
      if (!(prob >= 0.0)) throw GraphError("negative probability for outcome " + label);
      total += prob;
    }
    if (!d.normalized || std::abs(total - 1.0) > 1e-9) {
      throw GraphError("fidelity needs normalized distributions");
    }
  };
  check(p);
  check(q);
  if (p.probabilities.size() != q.probabilities.size()) {
    throw GraphError("fidelity over mismatched outcome sets");
  }
  double sum = 0.0;
  for (const auto& [label, prob] : p.probabilities) {
    auto it = q.probabilities.find(label);
    if (it == q.probabilities.end()) {
      throw GraphError("outcome " + label + " missing from second distribution");
    }
    sum += std::sqrt(prob * it->second);
  }
  return std::min(sum, 1.0);
}

double CrosscheckReport::max_deviation() const {
  return std::max({pair_deviation, pair_amplitude_deviation, quad_deviation.value_or(0.0)});
}

CrosscheckReport graph_vs_engine_crosscheck(const WeightedGraph& graph, const Circuit& circuit,
                                            const Bindings& bindings) {
  if (circuit.model() != SourceModel::kPerturbative) {
    throw GraphError("graph cross-check needs a perturbative-source circuit");
  }
  const double g = circuit.gain();
  if (!(g > 0.0)) throw GraphError("graph cross-check needs a positive source gain");
  const ModeRegistry& registry = circuit.registry();
  std::vector<std::size_t> vertex_modes;
  for (const auto& label : graph.vertices()) {
    const auto index = registry.find(label);
    if (!index || registry.kind(*index) != ModeKind::kDetector) {
      throw GraphError("graph vertex '" + label + "' is not a detector mode of the circuit");
    }
    vertex_modes.push_back(*index);
  }

  const auto result =
      evolve(circuit, FockState(std::vector<int>(registry.size(), 0)), bindings);
  const StateVector& state = result.state;
  const auto graph_pairs = pair_amplitudes(graph);
  const FockState vacuum(std::vector<int>(registry.size(), 0));

  CrosscheckReport report;
  std::map<std::string, Weight> graph_full;
  std::map<std::string, Weight> engine_pairs;
  std::map<std::string, double> engine_probs;
  const auto& vertices = graph.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const std::string label = pair_label(vertices[i], vertices[j]);
      auto it = graph_pairs.find(label);
      graph_full[label] = it == graph_pairs.end() ? Weight{} : it->second;
      const FockState basis =
          vacuum.with(vertex_modes[i], 1).with(vertex_modes[j], 1);
      engine_pairs[label] = state.amplitude(basis) / g;
      engine_probs[label] =
          probability(state, DetectionPattern::coincidence(registry, {vertices[i], vertices[j]}));
    }
  }
  double graph_total = 0.0;
  for (const auto& [label, amp] : graph_full) graph_total += std::norm(amp);
  double engine_total = 0.0;
  for (const auto& [label, p] : engine_probs) engine_total += p;
  // A fully destructive setting leaves only rounding noise to normalize.
  constexpr double kDark = 1e-24;
  const bool graph_dark = !(graph_total > kDark);
  const bool engine_dark = !(engine_total / (g * g) > kDark);
  if (!graph_dark) report.graph_distribution = normalized_distribution(graph_full);
  if (!engine_dark) report.engine_distribution.normalized = true;
  if (graph_dark != engine_dark) report.pair_deviation = 1.0;
  for (const auto& [label, p] : engine_probs) {
    if (!engine_dark) report.engine_distribution.probabilities[label] = p / engine_total;
    if (!graph_dark && !engine_dark) {
      report.pair_deviation =
          std::max(report.pair_deviation,
                   std::abs(p / engine_total - report.graph_distribution.probabilities.at(label)));
    }
    report.pair_amplitude_deviation =
        std::max(report.pair_amplitude_deviation,
                 std::abs(std::abs(engine_pairs.at(label)) - std::abs(graph_full.at(label))));
  }

  if (vertices.size() == 4 && !has_partial_beamsplitter(circuit)) {
    FockState quad = vacuum;
    for (std::size_t mode : vertex_modes) quad = quad.with(mode, 1);
    report.quad_deviation = std::abs(state.amplitude(quad) / (g * g) - quad_amplitude(graph));
  }
  return report;
}

}  // namespace pathid
