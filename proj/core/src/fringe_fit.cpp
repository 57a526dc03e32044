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

#include "pathid/fringe_fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pathid/angle.hpp"
#include "pathid/errors.hpp"

namespace pathid {
namespace {

// Single tone at fixed angular frequency: c0 + c1 sin(w u) + c2 cos(w u).
struct ToneFit {
  double omega = 0.0;
  Eigen::Vector3d coef = Eigen::Vector3d::Zero();
  double rss = std::numeric_limits<double>::infinity();
};

ToneFit fit_tone(const Eigen::VectorXd& u, const Eigen::VectorXd& y, double omega) {
  Eigen::MatrixXd design(u.size(), 3);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::sin(omega * u[i]);
    design(i, 2) = std::cos(omega * u[i]);
  }
  ToneFit fit;
  fit.omega = omega;
  fit.coef = design.colPivHouseholderQr().solve(y);
  fit.rss = (design * fit.coef - y).squaredNorm();
  return fit;
}

ToneFit golden_section(const Eigen::VectorXd& u, const Eigen::VectorXd& y, double lo,
                       double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  ToneFit f1 = fit_tone(u, y, x1);
  ToneFit f2 = fit_tone(u, y, x2);
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-14 * std::max(1.0, hi); ++iter) {
    if (f1.rss < f2.rss) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fit_tone(u, y, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fit_tone(u, y, x2);
    }
  }
  return f1.rss < f2.rss ? f1 : f2;
}

// Levenberg-Marquardt on (c0, c1, c2, omega).
ToneFit polish(const Eigen::VectorXd& u, const Eigen::VectorXd& y, ToneFit start,
               int max_iterations) {
  using Vec4 = Eigen::Matrix<double, 4, 1>;
  using Mat4 = Eigen::Matrix<double, 4, 4>;
  auto residuals = [&](const Vec4& p) {
    Eigen::VectorXd r(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      r[i] = y[i] - (p[0] + p[1] * std::sin(p[3] * u[i]) + p[2] * std::cos(p[3] * u[i]));
    }
    return r;
  };
  Vec4 p;
  p << start.coef[0], start.coef[1], start.coef[2], start.omega;
  Eigen::VectorXd r = residuals(p);
  double rss = r.squaredNorm();
  double lambda = 1e-3;
  for (int iter = 0; iter < max_iterations; ++iter) {
    Eigen::MatrixXd jac(u.size(), 4);
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      const double s = std::sin(p[3] * u[i]);
      const double c = std::cos(p[3] * u[i]);
      jac(i, 0) = 1.0;
      jac(i, 1) = s;
      jac(i, 2) = c;
      jac(i, 3) = u[i] * (p[1] * c - p[2] * s);
    }
    const Mat4 jtj = jac.transpose() * jac;
    const Vec4 jtr = jac.transpose() * r;
    bool improved = false;
    for (int attempt = 0; attempt < 30; ++attempt) {
      Mat4 damped = jtj;
      for (int k = 0; k < 4; ++k) damped(k, k) += lambda * std::max(jtj(k, k), 1e-300);
      const Vec4 step = damped.ldlt().solve(jtr);
      const Vec4 candidate = p + step;
      const Eigen::VectorXd rc = residuals(candidate);
      const double rss_c = rc.squaredNorm();
      if (std::isfinite(rss_c) && rss_c <= rss) {
        const bool converged = (rss - rss_c) <= 1e-15 * rss ||
                               step.norm() <= 1e-15 * (1.0 + p.norm());
        p = candidate;
        r = rc;
        rss = rss_c;
        lambda = std::max(lambda / 10.0, 1e-12);
        improved = true;
        if (converged) iter = max_iterations;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;
  }
  ToneFit out;
  out.coef = p.head<3>();
  out.omega = p[3];
  out.rss = rss;
  return out.rss <= start.rss ? out : start;
}

}  // namespace

double FringeFit::evaluate(double phase) const {
  return amplitude * (1.0 + visibility * std::sin(kPi * (phase - phase_offset) / period));
}

double FringeFit::d_max() const {
  return std::max(amplitude * (1.0 + visibility), amplitude * (1.0 - visibility));
}

double FringeFit::d_min() const {
  return std::min(amplitude * (1.0 + visibility), amplitude * (1.0 - visibility));
}

FringeFit fit_fringe(std::span<const FringeSample> samples, const FitOptions& options) {
  if (samples.size() < 5) {
    throw FitError("fringe fit needs at least 5 samples, got " +
                   std::to_string(samples.size()));
  }
  std::vector<FringeSample> sorted(samples.begin(), samples.end());
  for (const auto& s : sorted) {
    if (!std::isfinite(s.phase) || !std::isfinite(s.value)) {
      throw FitError("fringe fit: non-finite sample");
    }
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& l, const auto& r) { return l.phase < r.phase; });

  const auto [lo_it, hi_it] = std::minmax_element(
      sorted.begin(), sorted.end(), [](const auto& l, const auto& r) { return l.value < r.value; });
  const double scale = std::max(std::abs(lo_it->value), std::abs(hi_it->value));
  if (scale == 0.0 || (hi_it->value - lo_it->value) <= options.flat_tolerance * scale) {
    throw FitError("degenerate fringe data: samples are flat");
  }
  const double span = sorted.back().phase - sorted.front().phase;
  if (!(span > 0.0)) throw FitError("degenerate fringe data: zero phase span");

  const Eigen::Index n = static_cast<Eigen::Index>(sorted.size());
  const double center = 0.5 * (sorted.front().phase + sorted.back().phase);
  Eigen::VectorXd u(n), y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    u[i] = sorted[static_cast<std::size_t>(i)].phase - center;
    y[i] = sorted[static_cast<std::size_t>(i)].value;
  }

  // Frequencies whose half cycle fits inside the span, up to Nyquist for the
  // mean sample spacing.
  const double omega_min = kPi / span;
  const double omega_max = kPi * static_cast<double>(n - 1) / span;
  const double step = 2.0 * kPi / span / options.oversampling;
  ToneFit best;
  for (double omega = omega_min; omega <= omega_max + 1e-12; omega += step) {
    ToneFit fit = fit_tone(u, y, omega);
    if (fit.rss < best.rss) best = fit;
  }
  best = golden_section(u, y, std::max(omega_min, best.omega - step),
                        std::min(omega_max, best.omega + step));
  best = polish(u, y, best, options.max_iterations);

  const double omega = std::abs(best.omega);
  if (!(omega > 0.0) || kPi / omega > span * (1.0 + 1e-9)) {
    throw FitError("degenerate fringe data: span shorter than half the fitted period");
  }
  // Negative omega flips the sine term.
  const double c1 = best.omega < 0 ? -best.coef[1] : best.coef[1];
  const double c2 = best.coef[2];
  const double c0 = best.coef[0];
  const double radius = std::hypot(c1, c2);
  const double alpha = std::atan2(c2, c1);

  FringeFit fit;
  fit.period = kPi / omega;
  fit.amplitude = c0;
  fit.visibility = radius / c0;
  fit.phase_offset = center - alpha / omega;
  if (fit.visibility < 0) {
    fit.visibility = -fit.visibility;
    fit.phase_offset += fit.period;
  }
  fit.phase_offset = std::fmod(fit.phase_offset, 2.0 * fit.period);
  if (fit.phase_offset < 0) fit.phase_offset += 2.0 * fit.period;
  fit.residual_rms = std::sqrt(best.rss / static_cast<double>(n));
  return fit;
}

}  // namespace pathid
