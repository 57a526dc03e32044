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


#include "pathid/oracle/dense_evolution.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "random_circuits.hpp"
#include "pathid/angle.hpp"
#include "pathid/engine.hpp"
#include "pathid/scenarios.hpp"

namespace pathid {
namespace {

using oracle::DenseEvolution;

TEST(DenseEvolution, BasisDimension) {
  // C(n + m, m) states with at most n photons in m modes.
  EXPECT_EQ(DenseEvolution(*ModeRegistry::detectors({"a", "b"}), 3).dimension(), 10u);
  EXPECT_EQ(DenseEvolution(make_scenario("si-eq10").circuit.registry(), 4).dimension(), 210u);
}

TEST(DenseEvolution, SplitterMatrixIsUnitary) {
  const DenseEvolution dense(*ModeRegistry::detectors({"a", "b"}), 4);
  const auto m = dense.element_matrix(BeamSplitter{"a", "b", 0.3}, {});
  const std::size_t n = dense.dimension();
  Eigen::MatrixXcd u(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) u(r, c) = m[r * n + c];
  EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-12);
}

TEST(DenseEvolution, MatchesSparseEngineOnFourCrystals) {
  const Scenario s = make_scenario("si-eq10");
  const DenseEvolution dense(s.circuit.registry(), 4);
  for (double phi : {0.0, 0.4, kPi / 2, kPi, 5.5}) {
    const Bindings b{{"phi", phi}};
    const auto sparse = evolve(s.circuit, s.input, b).state;
    EXPECT_LT(oracle::max_deviation(dense.evolve(s.circuit, s.input, b), sparse), 1e-13) << phi;
  }
}

TEST(DenseEvolution, MatchesSparseEngineOnRandomLinearCircuits) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rc = testing::random_linear_circuit(rng, 3, 10, 3);
    const DenseEvolution dense(rc.circuit.registry(), 3);
    const auto sparse = evolve(rc.circuit, rc.input, {}).state;
    EXPECT_LT(oracle::max_deviation(dense.evolve(rc.circuit, rc.input, {}), sparse), 1e-12)
        << trial;
  }
}

TEST(DenseEvolution, MatchesSparseEngineWithSourcesUnderSameCap) {
  std::mt19937_64 rng(12);
  const int cap = 6;
  EvolveOptions options;
  options.policy.max_photons = cap;
  for (int trial = 0; trial < 20; ++trial) {
    const auto rc = testing::random_source_circuit(rng, 3, 8);
    const DenseEvolution dense(rc.circuit.registry(), cap);
    const auto sparse = evolve(rc.circuit, rc.input, {}, options).state;
    EXPECT_LT(oracle::max_deviation(dense.evolve(rc.circuit, rc.input, {}), sparse), 1e-11)
        << trial;
  }
}

TEST(DenseEvolution, DetectsAWrongElement) {
  const Scenario s = make_scenario("quad4-swap", {0.1, 2});
  const DenseEvolution dense(s.circuit.registry(), 6);
  auto elements = s.circuit.elements();
  for (auto& e : elements) {
    if (std::holds_alternative<ModeSwap>(e)) {
      const auto& sw = std::get<ModeSwap>(e);
      e = BeamSplitter{sw.first, sw.second, 0.5};
    }
  }
  const Bindings b{{"theta", 0.3}};
  const auto sparse = evolve(s.circuit, s.input, b).state;
  EXPECT_GT(oracle::max_deviation(dense.evolve(s.circuit.with_elements(elements), s.input, b),
                                  sparse),
            1e-3);
}

}  // namespace
}  // namespace pathid
