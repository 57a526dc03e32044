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

#include <stdexcept>
#include <string>

namespace pathid {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid Fock state, unknown mode, registry mismatch.
class StateError : public Error {
 public:
  using Error::Error;
};

// Element precondition failure, unbound parameter, malformed circuit.
class EvolutionError : public Error {
 public:
  using Error::Error;
};

// Bad detection pattern, zero-probability herald, bad efficiency inputs.
class DetectionError : public Error {
 public:
  using Error::Error;
};

// Degenerate or insufficient fringe data.
class FitError : public Error {
 public:
  using Error::Error;
};

// Odd vertex count, duplicate edges, unsupported graph size.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Circuit/graph/CSV documents that fail to parse or validate.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pathid
