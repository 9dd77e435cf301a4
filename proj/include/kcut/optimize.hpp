// Copyright 2026 The kcut-qaoa Authors
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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "kcut/error.hpp"

namespace kcut {

struct NelderMeadOptions {
  /// Stop once max |f_i - f_best| over the simplex falls below this.
  double tol = 1e-7;
  std::size_t max_iter = 1000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
};

/// Derivative-free simplex minimisation with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). The starting
/// simplex perturbs each coordinate of x0 by 5% of its value, or by 0.00025
/// when the coordinate is zero.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0,
                                    const NelderMeadOptions& opts = {}) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const std::size_t n = x0.size();
  if (n == 0) throw ParameterError("Nelder-Mead needs at least one coordinate");
  for (double v : x0)
    if (!std::isfinite(v)) throw ParameterError("Nelder-Mead start point is not finite");

  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    const double v = f(x);
    if (!std::isfinite(v)) throw OptimizationError(x, "objective returned a non-finite value");
    return v;
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i)
    pts[i + 1][i] = x0[i] != 0.0 ? 1.05 * x0[i] : 0.00025;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2;
    std::vector<double> v2;
    for (auto i : order) {
      p2.push_back(pts[i]);
      v2.push_back(vals[i]);
    }
    pts = std::move(p2);
    vals = std::move(v2);
  };
  auto combine = [n](const std::vector<double>& a, double ca, const std::vector<double>& b,
                     double cb) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ca * a[i] + cb * b[i];
    return out;
  };

  sort_simplex();
  while (res.iterations < opts.max_iter) {
    double spread = 0.0;
    for (std::size_t i = 1; i <= n; ++i) spread = std::max(spread, std::abs(vals[i] - vals[0]));
    if (spread < opts.tol) break;
    ++res.iterations;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / static_cast<double>(n);
    const auto& worst = pts[n];

    const auto xr = combine(centroid, 1.0 + kReflect, worst, -kReflect);
    const double fr = eval(xr);
    bool shrink = false;
    if (fr < vals[0]) {
      const auto xe = combine(centroid, 1.0 + kReflect * kExpand, worst, -kReflect * kExpand);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else if (fr < vals[n]) {
      const auto xc = combine(centroid, 1.0 + kContract * kReflect, worst, -kContract * kReflect);
      const double fc = eval(xc);
      if (fc <= fr) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        shrink = true;
      }
    } else {
      const auto xcc = combine(centroid, 1.0 - kContract, worst, kContract);
      const double fcc = eval(xcc);
      if (fcc < vals[n]) {
        pts[n] = xcc;
        vals[n] = fcc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t i = 1; i <= n; ++i) {
        pts[i] = combine(pts[0], 1.0 - kShrink, pts[i], kShrink);
        vals[i] = eval(pts[i]);
      }
    }
    sort_simplex();
  }
  res.x = pts[0];
  res.f = vals[0];
  return res;
}

}  // namespace kcut
