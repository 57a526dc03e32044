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


#include "pathid/angle.hpp"

#include <gtest/gtest.h>

#include "pathid/errors.hpp"

namespace pathid {
namespace {

TEST(ParseAngle, PlainNumbers) {
  EXPECT_DOUBLE_EQ(parse_angle("0"), 0.0);
  EXPECT_DOUBLE_EQ(parse_angle("1.25"), 1.25);
  EXPECT_DOUBLE_EQ(parse_angle("-0.5"), -0.5);
  EXPECT_DOUBLE_EQ(parse_angle("+2"), 2.0);
  EXPECT_DOUBLE_EQ(parse_angle(" 3e-1 "), 0.3);
}

TEST(ParseAngle, MultiplesOfPi) {
  EXPECT_DOUBLE_EQ(parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(parse_angle("-pi"), -kPi);
  EXPECT_DOUBLE_EQ(parse_angle("pi/4"), kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("-pi/4"), -kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("2pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(parse_angle("3pi/2"), 1.5 * kPi);
  EXPECT_DOUBLE_EQ(parse_angle("3*pi/4"), 0.75 * kPi);
  EXPECT_DOUBLE_EQ(parse_angle("pi*0.5"), 0.5 * kPi);
}

TEST(ParseAngle, RejectsGarbage) {
  for (const char* bad : {"", "abc", "pi/0", "pipi", "2*pi*", "1.2.3", "pi/x", "--pi"}) {
    EXPECT_THROW(parse_angle(bad), ParseError) << bad;
  }
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.0, 1.0, -0.1, kPi, 1e-300, 123456.789}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

}  // namespace
}  // namespace pathid
