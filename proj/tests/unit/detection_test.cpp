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


#include "pathid/detection.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "pathid/angle.hpp"
#include "pathid/engine.hpp"
#include "pathid/errors.hpp"
#include "pathid/scenarios.hpp"

namespace pathid {
namespace {

StateVector herzog_state(double g, double phi) {
  const Scenario s = make_scenario("herzog2", {g, 2});
  return evolve(s.circuit, s.input, {{"phi", phi}}).state;
}

TEST(DetectionPattern, ParsesShorthandAndExplicitForms) {
  const auto reg = ModeRegistry::detectors({"a", "b", "c", "d"});
  const auto ab = DetectionPattern::parse("ab", *reg);
  EXPECT_EQ(ab.to_string(), "a:1,b:1,c:0,d:0");
  const auto explicit_form = DetectionPattern::parse("a:1; b:2+, c:*", *reg);
  EXPECT_EQ(explicit_form.constraints().at("b"), CountPredicate::at_least(2));
  EXPECT_EQ(explicit_form.constraints().at("c"), CountPredicate::any());
  EXPECT_EQ(explicit_form.constraints().count("d"), 0u);
  EXPECT_TRUE(explicit_form.matches(FockState{1, 3, 5, 7}, *reg));
  EXPECT_FALSE(explicit_form.matches(FockState{1, 1, 0, 0}, *reg));
  EXPECT_EQ(DetectionPattern::coincidence(*reg, {"a", "b"}).to_string(), ab.to_string());

  EXPECT_THROW(DetectionPattern::parse("", *reg), DetectionError);
  EXPECT_THROW(DetectionPattern::parse("ax", *reg), DetectionError);
  EXPECT_THROW(DetectionPattern::parse("a:-1", *reg), DetectionError);
  EXPECT_THROW(DetectionPattern::parse("a:one", *reg), DetectionError);
  EXPECT_THROW(DetectionPattern::parse("z:1", *reg), DetectionError);
  EXPECT_THROW(DetectionPattern(DetectionPattern::Map{}), DetectionError);
}

TEST(DetectionPattern, ShorthandLeavesPumpsMarginalized) {
  const Scenario s = make_scenario("si-eq10");
  const auto ab = DetectionPattern::parse("ab", s.circuit.registry());
  EXPECT_EQ(ab.constraints().count("p1"), 0u);
  EXPECT_EQ(ab.constraints().size(), 4u);
}

TEST(Detection, TwoSourceCoincidenceProbability) {
  const double g = 0.1;
  const auto reg = ModeRegistry::detectors({"a", "b"});
  const auto ab = DetectionPattern::parse("ab", *reg);
  for (double phi : {0.0, kPi / 2, kPi, 2.2, 4.0}) {
    EXPECT_NEAR(probability(herzog_state(g, phi), ab),
                testing::two_source_pair_probability(g, phi), 1e-15)
        << phi;
  }
  EXPECT_NEAR(probability(herzog_state(g, 0.0), ab), 4 * g * g, 1e-15);
  EXPECT_NEAR(probability(herzog_state(g, kPi), ab), 0.0, 1e-15);
  EXPECT_NEAR(probability(herzog_state(g, kPi / 2), ab), 2 * g * g, 1e-15);
}

TEST(Detection, ConditionalProbability) {
  const auto state = herzog_state(0.1, 0.7);
  const auto& reg = state.registry();
  const auto a1 = DetectionPattern::parse("a:1", reg);
  const auto b1 = DetectionPattern::parse("b:1", reg);
  // Pair emission: a photon in a always comes with one in b.
  EXPECT_NEAR(conditional_probability(state, b1, a1), 1.0, 1e-12);
  EXPECT_THROW(conditional_probability(state, a1, a1), DetectionError);
  const auto vac = new_state(ModeRegistry::detectors({"a", "b"}), FockState{0, 0});
  EXPECT_THROW(conditional_probability(vac, b1, a1), DetectionError);
}

TEST(Detection, MarginalsPartitionTheNorm) {
  const Scenario s = make_scenario("si-eq10");
  const auto state = evolve(s.circuit, s.input, {{"phi", 1.1}}).state;
  const auto full = marginal_distribution(state, {"p1", "p2", "a", "b", "c", "d"});
  EXPECT_EQ(full.size(), state.size());
  double total = 0.0;
  for (const auto& [key, p] : marginal_distribution(state, {"a", "c"})) total += p;
  EXPECT_NEAR(total, norm2(state), 1e-14);
  EXPECT_THROW(marginal_distribution(state, {}), DetectionError);
  EXPECT_THROW(marginal_distribution(state, {"zz"}), DetectionError);

  const auto vac = new_state(ModeRegistry::detectors({"a", "b"}), FockState{0, 0});
  const auto m = marginal_distribution(vac, {"b"});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_DOUBLE_EQ(m.at({0}), 1.0);
}

TEST(Detection, MarginalDistanceCountsMissingKeys) {
  MarginalDistribution p{{{0}, 0.5}, {{1}, 0.5}};
  MarginalDistribution q{{{0}, 0.75}, {{2}, 0.25}};
  EXPECT_DOUBLE_EQ(marginal_distance(p, q), 0.5);
  EXPECT_DOUBLE_EQ(marginal_distance(p, p), 0.0);
}

TEST(Detection, PumpPhaseDoesNotSignal) {
  const Scenario s = make_scenario("si-eq10");
  for (const std::vector<std::string>& modes :
       {std::vector<std::string>{"p2", "c", "d"}, {"p1"}, {"p2"}, {"d"}}) {
    const auto report = no_signalling_check(s.circuit, s.input, "phi", modes, 24);
    EXPECT_TRUE(report.pass()) << report.max_deviation;
    EXPECT_EQ(report.phases.size(), 24u);
  }
  // The joint detector statistics do depend on phi.
  const auto joint = no_signalling_check(s.circuit, s.input, "phi", {"a", "b", "c", "d"}, 24);
  EXPECT_GT(joint.max_deviation, 1e-3);
}

TEST(Detection, VisibilityAndEfficiency) {
  EXPECT_DOUBLE_EQ(visibility(100, 0), 1.0);
  EXPECT_DOUBLE_EQ(visibility(3, 1), 0.5);
  EXPECT_DOUBLE_EQ(visibility(1, 1), 0.0);
  EXPECT_THROW(visibility(0, 0), DetectionError);
  EXPECT_THROW(visibility(1, 2), DetectionError);
  EXPECT_THROW(visibility(1, -1), DetectionError);

  EXPECT_DOUBLE_EQ(channel_efficiency(100, 1000), 0.1);
  EXPECT_DOUBLE_EQ(channel_efficiency(0, 1000), 0.0);
  EXPECT_THROW(channel_efficiency(1, 0), DetectionError);
  EXPECT_THROW(channel_efficiency(10, 5), DetectionError);
  EXPECT_THROW(channel_efficiency(-1, 5), DetectionError);

  EXPECT_NEAR(efficiency_to_db(0.1), -10.0, 1e-12);
  EXPECT_NEAR(efficiency_to_db(0.048), -13.19, 0.01);
  EXPECT_NEAR(db_to_efficiency(-13.2), 0.0479, 1e-4);
  for (double eta : {1e-3, 0.25, 1.0}) {
    EXPECT_NEAR(db_to_efficiency(efficiency_to_db(eta)), eta, 1e-15);
  }
}

TEST(Detection, FringeFrequencyRatio) {
  FringeFit quantum{1.0, 0.0, kPi / 2, 1.0, 0.0};
  FringeFit classical{1.0, 0.0, kPi, 1.0, 0.0};
  EXPECT_DOUBLE_EQ(fringe_frequency_ratio(quantum, classical), 2.0);
  quantum.period = 0.0;
  EXPECT_THROW(fringe_frequency_ratio(quantum, classical), DetectionError);
}

TEST(Detection, SwappedChipPairRatesAreFlat) {
  const Scenario s = make_scenario("quad4-swap", {0.1, 2});
  SweepSpec spec{"theta", 0.0, 2 * kPi, 24, false, {}};
  const auto points = sweep(s.circuit, s.input, spec);
  for (const char* pair : {"ab", "cd", "ac", "bd"}) {
    const auto pattern = DetectionPattern::parse(pair, s.circuit.registry());
    std::vector<FringeSample> samples;
    for (const auto& pt : points) samples.push_back({pt.value, probability(pt.result.state, pattern)});
    double lo = samples[0].value, hi = samples[0].value;
    for (const auto& smp : samples) {
      lo = std::min(lo, smp.value);
      hi = std::max(hi, smp.value);
    }
    EXPECT_LT(hi - lo, 1e-15) << pair;
    // A flat curve has no fringe to fit.
    EXPECT_THROW(fit_fringe(samples), FitError) << pair;
  }
}

TEST(SeriesCsv, RoundTrip) {
  std::vector<SeriesRow> rows{{0.0, "a:1;b:1", 0.04, std::nullopt},
                              {0.5, "a:1;b:1", 0.0351, std::nullopt}};
  std::ostringstream out;
  write_series_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "phase_rad,pattern_id,probability");
  std::istringstream in(out.str());
  const auto back = read_series_csv(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].phase, 0.5);
  EXPECT_EQ(back[1].pattern_id, "a:1;b:1");
  EXPECT_EQ(back[1].probability, 0.0351);
  EXPECT_FALSE(back[1].counts.has_value());

  sample_counts(rows, 1000, 7);
  std::ostringstream counted;
  write_series_csv(counted, rows);
  std::istringstream in2(counted.str());
  const auto back2 = read_series_csv(in2);
  ASSERT_TRUE(back2[0].counts.has_value());
  EXPECT_EQ(back2[0].counts, rows[0].counts);
}

TEST(SeriesCsv, ReportsBadLines) {
  std::istringstream missing_header("0,ab,0.1\n");
  EXPECT_THROW(read_series_csv(missing_header), ParseError);
  std::istringstream bad_number("phase_rad,pattern_id,probability\n0,ab,0.1\nx,ab,0.2\n");
  try {
    read_series_csv(bad_number);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3) << e.what();
  }
  std::istringstream short_row("phase_rad,pattern_id,probability\n0,ab\n");
  EXPECT_THROW(read_series_csv(short_row), ParseError);
}

TEST(SampleCounts, SeededAndUnbiased) {
  std::vector<SeriesRow> base(2000, {0.0, "ab", 0.02, std::nullopt});
  auto r1 = base, r2 = base, r3 = base;
  sample_counts(r1, 1000, 7);
  sample_counts(r2, 1000, 7);
  sample_counts(r3, 1000, 8);
  double mean = 0.0;
  bool differs = false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_EQ(r1[i].counts, r2[i].counts);
    differs |= r1[i].counts != r3[i].counts;
    mean += static_cast<double>(*r1[i].counts);
  }
  mean /= static_cast<double>(base.size());
  EXPECT_TRUE(differs);
  // Poisson(20): standard error of the mean over 2000 draws is 0.1.
  EXPECT_NEAR(mean, 20.0, 0.5);
}

}  // namespace
}  // namespace pathid
