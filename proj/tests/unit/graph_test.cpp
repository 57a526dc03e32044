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

#include <gtest/gtest.h>

#include <cmath>

#include "pathid/angle.hpp"
#include "pathid/errors.hpp"
#include "pathid/scenarios.hpp"

namespace pathid {
namespace {

using Complex = std::complex<double>;

std::vector<std::string> labels_of(const WeightedGraph& g, const Matching& m) {
  std::vector<std::string> out;
  for (auto e : m) out.push_back(pair_label(g.edges()[e].u, g.edges()[e].v));
  return out;
}

WeightedGraph square(Complex ab, Complex cd, Complex ac, Complex bd) {
  return WeightedGraph({"a", "b", "c", "d"},
                       {{"a", "b", ab}, {"c", "d", cd}, {"a", "c", ac}, {"b", "d", bd}});
}

TEST(WeightedGraph, Validation) {
  EXPECT_THROW(WeightedGraph({"a", "a"}, {}), GraphError);
  EXPECT_THROW(WeightedGraph({"a", ""}, {}), GraphError);
  EXPECT_THROW(WeightedGraph({"a", "b"}, {{"a", "z", 1.0}}), GraphError);
  EXPECT_THROW(WeightedGraph({"a", "b"}, {{"a", "a", 1.0}}), GraphError);
  EXPECT_THROW(WeightedGraph({"a", "b"}, {{"a", "b", 1.0}, {"b", "a", 2.0}}), GraphError);
  EXPECT_THROW(WeightedGraph({"a", "b"}, {{"a", "b", Complex(NAN, 0)}}), GraphError);

  const auto merged = WeightedGraph::collapse({"b", "a"}, {{"a", "b", 1.0}, {"b", "a", 2.0}});
  ASSERT_EQ(merged.edges().size(), 1u);
  EXPECT_EQ(merged.weight("b", "a"), Weight(3.0));
  EXPECT_EQ(merged.vertices(), (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(WeightedGraph({"a", "b"}, {}).weight("a", "b").has_value());
}

TEST(WeightedGraph, PairLabels) {
  EXPECT_EQ(pair_label("b", "a"), "ab");
  EXPECT_EQ(pair_label("d1", "a"), "a|d1");
}

TEST(PerfectMatchings, SquareInLexicographicOrder) {
  const auto g = square(1, 1, 1, 1);
  const auto ms = perfect_matchings(g);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(labels_of(g, ms[0]), (std::vector<std::string>{"ab", "cd"}));
  EXPECT_EQ(labels_of(g, ms[1]), (std::vector<std::string>{"ac", "bd"}));
}

TEST(PerfectMatchings, CompleteGraphOnFour) {
  std::vector<GraphEdge> edges;
  const std::vector<std::string> v{"a", "b", "c", "d"};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) edges.push_back({v[i], v[j], 1.0});
  const WeightedGraph k4(v, edges);
  EXPECT_EQ(perfect_matchings(k4).size(), 3u);
  EXPECT_EQ(matching_sum(k4), Weight(3.0));
}

TEST(PerfectMatchings, EdgeCases) {
  const WeightedGraph isolated({"a", "b", "c", "d"}, {{"a", "b", 1.0}, {"a", "c", 1.0}});
  EXPECT_TRUE(perfect_matchings(isolated).empty());
  EXPECT_EQ(matching_sum(isolated), Weight(0.0));
  EXPECT_THROW(perfect_matchings(WeightedGraph({"a", "b", "c"}, {})), GraphError);
  std::vector<std::string> ten;
  for (char c = 'a'; c < 'a' + 10; ++c) ten.emplace_back(1, c);
  EXPECT_THROW(perfect_matchings(WeightedGraph(ten, {})), GraphError);
  EXPECT_EQ(perfect_matchings(WeightedGraph({}, {})).size(), 1u);
  EXPECT_EQ(matching_sum(WeightedGraph({}, {})), Weight(1.0));
}

TEST(QuadAmplitude, InterferenceOfTwoMatchings) {
  EXPECT_NEAR(std::abs(quad_amplitude(square(1, 1, 1, std::polar(1.0, kPi)))), 0.0, 1e-15);
  EXPECT_EQ(quad_amplitude(square(1, 1, 1, 1)), Weight(2.0));
  EXPECT_EQ(quad_amplitude(square(1, 1, 1, 0)), Weight(1.0));
  EXPECT_EQ(quad_amplitude(square(Complex(0, 2), 3, 0.5, 4)), Complex(0, 6) + 2.0);
  EXPECT_THROW(quad_amplitude(WeightedGraph({"a", "b"}, {{"a", "b", 1.0}})), GraphError);
}

TEST(MatchingDistribution, SingleEdge) {
  const auto dist =
      normalized_distribution(pair_amplitudes(WeightedGraph({"a", "b"}, {{"a", "b", 0.3}})));
  EXPECT_TRUE(dist.normalized);
  ASSERT_EQ(dist.probabilities.size(), 1u);
  EXPECT_DOUBLE_EQ(dist.probabilities.at("ab"), 1.0);
  EXPECT_THROW(normalized_distribution({{"ab", 0.0}, {"cd", 0.0}}), GraphError);
}

// Source amplitudes of the 50:50 chip with -pi/4 and pi/4 relative phases,
// each written with its 1/2 prefactor: two paths into ab and cd, one into ac
// and bd.
TEST(MatchingDistribution, BalancedCouplerRates) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex ab = (r + std::polar(1.0, -kPi / 4)) / 2.0;
  const Complex cd = (r + std::polar(1.0, kPi / 4)) / 2.0;
  const Complex ac = r / 2.0;
  const Complex bd = r / 2.0;
  const auto dist = normalized_distribution(pair_amplitudes(square(ab, cd, ac, bd)));
  EXPECT_NEAR(dist.probabilities.at("ab"), 0.41667, 5e-6);
  EXPECT_NEAR(dist.probabilities.at("cd"), 0.41667, 5e-6);
  EXPECT_NEAR(dist.probabilities.at("ac"), 0.08333, 5e-6);
  EXPECT_NEAR(dist.probabilities.at("bd"), 0.08333, 5e-6);
  EXPECT_NEAR(dist.probabilities.at("ab"), 5.0 / 12.0, 1e-15);
}

TEST(Fidelity, BhattacharyyaCases) {
  const MatchingDistribution p{{{"ab", 0.5}, {"cd", 0.5}}, true};
  const MatchingDistribution q{{{"ab", 1.0}, {"cd", 0.0}}, true};
  const MatchingDistribution r{{{"ab", 0.0}, {"cd", 1.0}}, true};
  EXPECT_DOUBLE_EQ(fidelity(p, p), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(q, r), 0.0);
  EXPECT_NEAR(fidelity(p, q), std::sqrt(0.5), 1e-15);
  EXPECT_DOUBLE_EQ(fidelity(p, q), fidelity(q, p));
  const MatchingDistribution other{{{"ab", 0.5}, {"ac", 0.5}}, true};
  EXPECT_THROW(fidelity(p, other), GraphError);
  const MatchingDistribution unnormalized{{{"ab", 0.5}, {"cd", 0.7}}, false};
  EXPECT_THROW(fidelity(p, unnormalized), GraphError);
}

TEST(Crosscheck, TwoSourcesAgreeWithEngine) {
  const Circuit circuit = build_scenario("herzog2", {0.05, 2});
  for (double phi : {0.0, 0.8, kPi / 2}) {
    const auto graph =
        WeightedGraph::collapse({"a", "b"}, {{"a", "b", std::polar(1.0, phi)}, {"a", "b", 1.0}});
    const auto report = graph_vs_engine_crosscheck(graph, circuit, {{"phi", phi}});
    EXPECT_LT(report.max_deviation(), 1e-10) << phi;
    EXPECT_FALSE(report.quad_deviation.has_value());
  }
  // Fully destructive: both sides are dark.
  const auto dark =
      WeightedGraph::collapse({"a", "b"}, {{"a", "b", std::polar(1.0, kPi)}, {"a", "b", 1.0}});
  EXPECT_LT(graph_vs_engine_crosscheck(dark, circuit, {{"phi", kPi}}).max_deviation(), 1e-10);
}

TEST(Crosscheck, SwappedChipIncludingFourFold) {
  const Circuit circuit = build_scenario("quad4-swap", {0.05, 2});
  for (double theta : {0.0, 2.0, kPi}) {
    const Complex half = std::polar(1.0, theta / 2);
    const auto report =
        graph_vs_engine_crosscheck(square(half, half, 1.0, 1.0), circuit, {{"theta", theta}});
    ASSERT_TRUE(report.quad_deviation.has_value());
    EXPECT_LT(report.max_deviation(), 1e-10) << theta;
  }
}

TEST(Crosscheck, BalancedCouplerWithSplitterReflections) {
  const Circuit circuit = build_scenario("si-fig8", {0.05, 1});
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  const double t2 = 0.4, t3 = 1.9;
  const auto graph = WeightedGraph::collapse(
      {"a", "b", "c", "d"}, {{"a", "b", std::polar(r, t3)},
                             {"a", "c", i * std::polar(r, t3)},
                             {"c", "d", std::polar(r, t2)},
                             {"b", "d", i * std::polar(r, t2)},
                             {"a", "b", std::polar(1.0, t3 - kPi / 4)},
                             {"c", "d", std::polar(1.0, t2 + kPi / 4)}});
  const auto report = graph_vs_engine_crosscheck(graph, circuit, {{"theta2", t2}, {"theta3", t3}});
  EXPECT_LT(report.max_deviation(), 1e-10);
  EXPECT_FALSE(report.quad_deviation.has_value());

  // A wrong weight shows up.
  const auto wrong = graph.with_edge_weight(0, graph.edges()[0].weight * 2.0);
  EXPECT_GT(graph_vs_engine_crosscheck(wrong, circuit, {{"theta2", t2}, {"theta3", t3}})
                .max_deviation(),
            1e-3);
}

TEST(Crosscheck, RejectsForeignVertices) {
  const Circuit circuit = build_scenario("herzog2");
  EXPECT_THROW(graph_vs_engine_crosscheck(WeightedGraph({"a", "z"}, {{"a", "z", 1.0}}), circuit,
                                          {{"phi", 0.0}}),
               GraphError);
}

}  // namespace
}  // namespace pathid
