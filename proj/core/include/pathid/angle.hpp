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

#include <string>
#include <string_view>

namespace pathid {

inline constexpr double kPi = 3.14159265358979323846;

// Parses an angle in radians. Accepts plain numbers ("0.5", "-1e-3") and
// symbolic multiples of pi: "pi", "-pi/4", "3pi/2", "3*pi/4", "2pi", "pi*0.5".
// Throws ParseError on anything else.
double parse_angle(std::string_view text);

// Shortest representation that parse_angle reads back bit-exactly.
std::string format_double(double value);

}  // namespace pathid
