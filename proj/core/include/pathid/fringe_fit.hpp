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

#include <span>

namespace pathid {

struct FringeSample {
  double phase = 0.0;
  double value = 0.0;
};

// amplitude * (1 + visibility * sin(pi * (phase - phase_offset) / period)).
// Canonical form: visibility >= 0 and phase_offset in [0, 2 * period).
// `period` is the half-cycle length of the sine argument, so a 1 + cos(phase)
// fringe has period pi.
struct FringeFit {
  double visibility = 0.0;
  double phase_offset = 0.0;
  double period = 0.0;
  double amplitude = 0.0;
  double residual_rms = 0.0;

  double evaluate(double phase) const;
  double d_max() const;
  double d_min() const;
};

struct FitOptions {
  // Frequency grid points per 2*pi/span spacing in the initial scan.
  int oversampling = 16;
  int max_iterations = 200;
  // (max - min) / max|value| below this counts as flat data.
  double flat_tolerance = 1e-9;
};

// Least-squares sinusoid fit. The initial frequency is the best single-tone
// least-squares match over a deterministic grid (a non-uniform periodogram),
// refined by golden-section search on the projected residual, then polished
// with Levenberg-Marquardt on all four parameters.
// Throws FitError for fewer than 5 samples, flat data, or data spanning less
// than half a fitted period.
FringeFit fit_fringe(std::span<const FringeSample> samples, const FitOptions& options = {});

}  // namespace pathid
