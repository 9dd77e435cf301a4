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

/**
 * @file
 * Classical MAX k-CUT objective, exhaustive solver and reference ratios.
 * Colors are zero-indexed: every vertex carries a label in {0, ..., k-1}.
 */

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "kcut/error.hpp"
#include "kcut/graph.hpp"

namespace kcut {

using ColorAssignment = std::vector<unsigned>;

struct CutResult {
  double best_value = 0.0;
  ColorAssignment best_assignment;
  std::uint64_t evaluated = 0;
};

inline void check_assignment(const Graph& g, unsigned k, const ColorAssignment& x) {
  if (x.size() != g.num_vertices())
    throw ParameterError("assignment length " + std::to_string(x.size()) + " != |V| " +
                         std::to_string(g.num_vertices()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= k)
      throw ParameterError("vertex " + std::to_string(i) + " has color " + std::to_string(x[i]) +
                           " >= k = " + std::to_string(k));
  }
}

/// Total weight of edges whose endpoints carry different colors.
inline double cut_value(const Graph& g, unsigned k, const ColorAssignment& x) {
  check_assignment(g, k, x);
  double sum = 0.0;
  for (const auto& e : g.edges()) {
    if (x[e.u] != x[e.v]) sum += e.w;
  }
  return sum;
}

struct BruteForceOptions {
  /// Maximum number of assignments to evaluate.
  std::uint64_t budget = 100'000'000;
  /// Pin vertex 0 to color 0; every optimum has a relabelled copy there.
  bool fix_first_color = true;
};

/// Exhaustive maximisation over all k^|V| colorings (k^(|V|-1) with the
/// symmetry fix). Ties keep the lexicographically smallest assignment.
inline CutResult brute_force(const Graph& g, unsigned k, const BruteForceOptions& opts = {}) {
  if (k < 1) throw ParameterError("k must be at least 1");
  const std::size_t n = g.num_vertices();
  const std::size_t free_vertices = opts.fix_first_color ? n - 1 : n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free_vertices; ++i) {
    if (total > opts.budget / k + 1) throw CapacityError("brute force exceeds evaluation budget");
    total *= k;
  }
  if (total > opts.budget) throw CapacityError("brute force exceeds evaluation budget");

  // Odometer over the free vertices, last vertex fastest, so the visiting
  // order is lexicographic and the first strict maximum is the smallest.
  ColorAssignment x(n, 0);
  const std::size_t first = n - free_vertices;
  CutResult result;
  result.best_value = -std::numeric_limits<double>::infinity();
  for (std::uint64_t it = 0; it < total; ++it) {
    double value = 0.0;
    for (const auto& e : g.edges()) {
      if (x[e.u] != x[e.v]) value += e.w;
    }
    if (value > result.best_value) {
      result.best_value = value;
      result.best_assignment = x;
    }
    for (std::size_t pos = n; pos-- > first;) {
      if (++x[pos] < k) break;
      x[pos] = 0;
    }
  }
  result.evaluated = total;
  return result;
}

/// Expected fraction of the total weight cut by a uniformly random coloring.
inline double random_baseline(unsigned k) {
  if (k < 2) throw ParameterError("random baseline needs k >= 2");
  return 1.0 - 1.0 / static_cast<double>(k);
}

/// Published polynomial-time approximation guarantees (Goemans-Williamson
/// for k = 2, de Klerk et al. for k >= 3). Constants only.
inline double reference_ratio(unsigned k) {
  static constexpr std::array<double, 8> table = {0.878567, 0.836008, 0.857487, 0.876610,
                                                  0.891543, 0.903259, 0.912664, 0.920367};
  if (k < 2 || k > 9) throw ParameterError("reference ratio tabulated for 2 <= k <= 9 only");
  return table[k - 2];
}

}  // namespace kcut
