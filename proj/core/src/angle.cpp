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

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "pathid/errors.hpp"

namespace pathid {
namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool parse_number(std::string_view text, double& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

double parse_angle(std::string_view raw) {
  const std::string text = strip(raw);
  double value = 0.0;
  if (parse_number(text, value)) return value;

  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string::npos || text.find("pi", pi_pos + 2) != std::string::npos) {
    throw ParseError("invalid angle '" + std::string(raw) + "'");
  }

  // [sign][coef][*]pi[*coef2][/denom]
  std::string head = text.substr(0, pi_pos);
  std::string tail = text.substr(pi_pos + 2);
  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    sign = head.front() == '-' ? -1.0 : 1.0;
    head.erase(head.begin());
  }
  if (!head.empty() && head.back() == '*') head.pop_back();
  double coef = 1.0;
  if (!head.empty() && !parse_number(head, coef)) {
    throw ParseError("invalid angle '" + std::string(raw) + "'");
  }
  double factor = 1.0;
  double denom = 1.0;
  if (!tail.empty() && tail.front() == '*') {
    const auto slash = tail.find('/');
    const std::string mult = tail.substr(1, slash == std::string::npos ? std::string::npos
                                                                        : slash - 1);
    if (!parse_number(mult, factor)) {
      throw ParseError("invalid angle '" + std::string(raw) + "'");
    }
    tail = slash == std::string::npos ? std::string() : tail.substr(slash);
  }
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_number(tail.substr(1), denom) || denom == 0.0) {
      throw ParseError("invalid angle '" + std::string(raw) + "'");
    }
  }
  return sign * coef * factor * kPi / denom;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace pathid
