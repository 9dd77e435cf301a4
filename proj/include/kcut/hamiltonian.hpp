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
 * Diagonal problem Hamiltonians for the binary and one-hot encodings.
 *
 * Qubit and bit order, shared by every module:
 *  - qubit q of an n-qubit register is bit (n - 1 - q) of the basis index,
 *    so qubit 0 is the most significant bit;
 *  - vertex v owns qubits v*L .. v*L + L - 1 (L qubits per vertex) and
 *    qubit v*L is the most significant bit of the vertex label;
 *  - in the one-hot encoding, group position a (0 = most significant)
 *    stands for color a.
 *
 * Conversion to cut values, with W the total weight:
 *  - binary:  cut = (W - value) / 2
 *  - one-hot: cut = (k W - value) / 4   (feasible states only)
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcut/cut.hpp"
#include "kcut/error.hpp"
#include "kcut/graph.hpp"

namespace kcut {

inline constexpr unsigned kDefaultQubitBudget = 26;

enum class EncodingKind { Binary, OneHotX, OneHotPenaltyX, OneHotXY };

inline std::string to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Binary: return "binary";
    case EncodingKind::OneHotX: return "onehot-x";
    case EncodingKind::OneHotPenaltyX: return "onehot-penalty";
    case EncodingKind::OneHotXY: return "onehot-xy";
  }
  return "?";
}

inline EncodingKind parse_encoding(const std::string& name) {
  if (name == "binary") return EncodingKind::Binary;
  if (name == "onehot-x") return EncodingKind::OneHotX;
  if (name == "onehot-penalty") return EncodingKind::OneHotPenaltyX;
  if (name == "onehot-xy") return EncodingKind::OneHotXY;
  throw ParameterError("unknown scheme '" + name + "'");
}

/// ceil(log2(k)) for k >= 1.
inline unsigned bits_for(unsigned k) {
  unsigned bits = 0;
  while ((1u << bits) < k) ++bits;
  return bits;
}

inline bool is_power_of_two(unsigned k) { return k != 0 && (k & (k - 1)) == 0; }

struct EncodingScheme {
  EncodingKind kind = EncodingKind::Binary;
  unsigned k = 2;
  /// Only meaningful for OneHotPenaltyX.
  double penalty_beta = 0.0;

  bool one_hot() const noexcept { return kind != EncodingKind::Binary; }

  unsigned qubits_per_vertex() const noexcept { return one_hot() ? k : bits_for(k); }

  unsigned work_qubits(std::size_t num_vertices) const noexcept {
    return static_cast<unsigned>(num_vertices) * qubits_per_vertex();
  }
};

/// Smallest integer penalty strictly above k|E| that also meets |V|/k.
inline double default_penalty_beta(const Graph& g, unsigned k) {
  const double by_edges = static_cast<double>(k) * static_cast<double>(g.num_edges()) + 1.0;
  const double by_vertices = static_cast<double>(g.num_vertices()) / k;
  return std::max(by_edges, std::ceil(by_vertices));
}

inline void check_penalty(const Graph& g, const EncodingScheme& s) {
  const double vk = static_cast<double>(g.num_vertices()) / s.k;
  const double ke = static_cast<double>(s.k) * static_cast<double>(g.num_edges());
  if (!(s.penalty_beta >= vk && s.penalty_beta > ke))
    throw ParameterError("penalty weight must satisfy beta >= |V|/k and beta > k|E|");
}

inline EncodingScheme make_scheme(EncodingKind kind, unsigned k, const Graph& g,
                                  std::optional<double> penalty_beta = std::nullopt) {
  if (k < 2) throw ParameterError("k must be at least 2");
  EncodingScheme s{kind, k, 0.0};
  if (kind == EncodingKind::OneHotPenaltyX) {
    s.penalty_beta = penalty_beta.value_or(default_penalty_beta(g, k));
    check_penalty(g, s);
  }
  return s;
}

/// Real diagonal over 2^n basis states. Holds a compressed copy (distinct
/// levels plus per-state index) when few distinct values occur, which makes
/// repeated phase application cheap.
class DiagonalHamiltonian {
 public:
  DiagonalHamiltonian() = default;

  DiagonalHamiltonian(unsigned n_qubits, std::vector<double> values, EncodingScheme scheme = {})
      : n_qubits_(n_qubits), values_(std::move(values)), scheme_(scheme) {
    if (values_.size() != (std::size_t{1} << n_qubits_))
      throw ParameterError("diagonal length must be 2^n");
    compress();
  }

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t z) const { return values_[z]; }
  const EncodingScheme& scheme() const noexcept { return scheme_; }

  double min() const { return *std::min_element(values_.begin(), values_.end()); }
  double max() const { return *std::max_element(values_.begin(), values_.end()); }

  bool compressed() const noexcept { return !level_index_.empty(); }
  const std::vector<double>& levels() const noexcept { return levels_; }
  const std::vector<std::uint16_t>& level_index() const noexcept { return level_index_; }

 private:
  void compress() {
    static constexpr std::size_t kMaxLevels = 4096;
    std::map<double, std::uint16_t> ids;
    std::vector<std::uint16_t> index(values_.size());
    for (std::size_t z = 0; z < values_.size(); ++z) {
      auto [it, inserted] = ids.emplace(values_[z], static_cast<std::uint16_t>(ids.size()));
      if (inserted && ids.size() > kMaxLevels) return;
      index[z] = it->second;
    }
    levels_.assign(ids.size(), 0.0);
    for (const auto& [value, id] : ids) levels_[id] = value;
    level_index_ = std::move(index);
  }

  unsigned n_qubits_ = 0;
  std::vector<double> values_;
  EncodingScheme scheme_;
  std::vector<double> levels_;
  std::vector<std::uint16_t> level_index_;
};

inline void check_budget(unsigned n_qubits, unsigned budget) {
  if (n_qubits > budget)
    throw CapacityError(std::to_string(n_qubits) + " qubits exceed the budget of " +
                        std::to_string(budget));
}

/// Label of vertex v read from basis index z (L bits per vertex).
inline unsigned vertex_label(std::uint64_t z, std::size_t v, std::size_t num_vertices, unsigned L) {
  const auto shift = (num_vertices - 1 - v) * L;
  return static_cast<unsigned>((z >> shift) & ((std::uint64_t{1} << L) - 1));
}

/// 2^L x 2^L interaction matrix of one edge: -1 marks a cut. Labels
/// k-1 .. 2^L-1 are merged into the single color k-1.
inline std::vector<std::vector<int>> build_D(unsigned k) {
  if (k < 2) throw ParameterError("k must be at least 2");
  const unsigned dim = 1u << bits_for(k);
  std::vector<std::vector<int>> d(dim, std::vector<int>(dim, 1));
  for (unsigned a = 0; a < dim; ++a) {
    for (unsigned b = 0; b < dim; ++b) {
      const bool merged = a >= k - 1 && b >= k - 1;
      d[a][b] = (a != b && !merged) ? -1 : 1;
    }
  }
  return d;
}

inline DiagonalHamiltonian build_binary_diagonal(const Graph& g, unsigned k,
                                                 unsigned budget = kDefaultQubitBudget) {
  const unsigned L = bits_for(k);
  const unsigned n = static_cast<unsigned>(g.num_vertices()) * L;
  check_budget(n, budget);
  const auto d = build_D(k);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> values(dim, 0.0);
  const auto nv = g.num_vertices();
  for (std::size_t z = 0; z < dim; ++z) {
    double sum = 0.0;
    for (const auto& e : g.edges())
      sum += e.w * d[vertex_label(z, e.u, nv, L)][vertex_label(z, e.v, nv, L)];
    values[z] = sum;
  }
  return DiagonalHamiltonian(n, std::move(values), EncodingScheme{EncodingKind::Binary, k, 0.0});
}

inline ColorAssignment decode_binary(std::uint64_t z, std::size_t num_vertices, unsigned k) {
  const unsigned L = bits_for(k);
  ColorAssignment x(num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v)
    x[v] = std::min(vertex_label(z, v, num_vertices, L), k - 1);
  return x;
}

/// Sum over edges and colors of w_ij Z_{i,a} Z_{j,a}. For two k-bit groups
/// the inner sum equals k - 2 * popcount(group_i xor group_j).
inline DiagonalHamiltonian build_onehot_diagonal(const Graph& g, unsigned k,
                                                 unsigned budget = kDefaultQubitBudget) {
  const unsigned n = static_cast<unsigned>(g.num_vertices()) * k;
  check_budget(n, budget);
  const std::size_t dim = std::size_t{1} << n;
  const auto nv = g.num_vertices();
  std::vector<double> values(dim, 0.0);
  for (std::size_t z = 0; z < dim; ++z) {
    double sum = 0.0;
    for (const auto& e : g.edges()) {
      const auto diff = vertex_label(z, e.u, nv, k) ^ vertex_label(z, e.v, nv, k);
      sum += e.w * (static_cast<double>(k) - 2.0 * std::popcount(diff));
    }
    values[z] = sum;
  }
  return DiagonalHamiltonian(n, std::move(values), EncodingScheme{EncodingKind::OneHotX, k, 0.0});
}

/// Half the sum over vertices of Z_{v,a} Z_{v,b} for a < b. With h the
/// Hamming weight of a group, the group term is ((k - 2h)^2 - k) / 4.
inline DiagonalHamiltonian build_penalty_diagonal(std::size_t num_vertices, unsigned k,
                                                  unsigned budget = kDefaultQubitBudget) {
  const unsigned n = static_cast<unsigned>(num_vertices) * k;
  check_budget(n, budget);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> values(dim, 0.0);
  for (std::size_t z = 0; z < dim; ++z) {
    double sum = 0.0;
    for (std::size_t v = 0; v < num_vertices; ++v) {
      const double s = static_cast<double>(k) - 2.0 * std::popcount(vertex_label(z, v, num_vertices, k));
      sum += (s * s - static_cast<double>(k)) / 4.0;
    }
    values[z] = sum;
  }
  return DiagonalHamiltonian(n, std::move(values),
                             EncodingScheme{EncodingKind::OneHotPenaltyX, k, 0.0});
}

/// Elementwise problem + beta * penalty.
inline DiagonalHamiltonian add_penalty(const DiagonalHamiltonian& problem,
                                       const DiagonalHamiltonian& penalty, double beta) {
  if (problem.size() != penalty.size()) throw ParameterError("diagonal size mismatch");
  std::vector<double> values(problem.size());
  for (std::size_t z = 0; z < values.size(); ++z) values[z] = problem[z] + beta * penalty[z];
  EncodingScheme s = problem.scheme();
  s.kind = EncodingKind::OneHotPenaltyX;
  s.penalty_beta = beta;
  return DiagonalHamiltonian(problem.n_qubits(), std::move(values), s);
}

/// std::nullopt when some vertex group does not have exactly one bit set.
inline std::optional<ColorAssignment> decode_onehot(std::uint64_t z, std::size_t num_vertices,
                                                    unsigned k) {
  ColorAssignment x(num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    const unsigned group = vertex_label(z, v, num_vertices, k);
    if (std::popcount(group) != 1) return std::nullopt;
    x[v] = k - 1 - static_cast<unsigned>(std::countr_zero(group));
  }
  return x;
}

/// Fraction of the one-hot Hilbert space that encodes valid colorings.
inline double feasible_fraction(unsigned k, std::size_t num_vertices) {
  if (k < 1) throw ParameterError("k must be at least 1");
  return std::pow(static_cast<double>(k) / std::ldexp(1.0, static_cast<int>(k)),
                  static_cast<double>(num_vertices));
}

/// Phase-separating diagonal used by the optimizer for a scheme: binary
/// D-matrix form, one-hot ZZ form, plus the penalty for OneHotPenaltyX.
inline DiagonalHamiltonian build_problem_diagonal(const Graph& g, const EncodingScheme& s,
                                                  unsigned budget = kDefaultQubitBudget) {
  switch (s.kind) {
    case EncodingKind::Binary: return build_binary_diagonal(g, s.k, budget);
    case EncodingKind::OneHotX: return build_onehot_diagonal(g, s.k, budget);
    case EncodingKind::OneHotXY: {
      auto d = build_onehot_diagonal(g, s.k, budget);
      return DiagonalHamiltonian(d.n_qubits(), d.values(), s);
    }
    case EncodingKind::OneHotPenaltyX:
      check_penalty(g, s);
      return add_penalty(build_onehot_diagonal(g, s.k, budget),
                         build_penalty_diagonal(g.num_vertices(), s.k, budget), s.penalty_beta);
  }
  throw ParameterError("unknown encoding");
}

/// Classical cut value of every basis state; infeasible one-hot states
/// score zero.
inline std::vector<double> cost_vector(const Graph& g, const EncodingScheme& s,
                                       unsigned budget = kDefaultQubitBudget) {
  const unsigned n = s.work_qubits(g.num_vertices());
  check_budget(n, budget);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> cost(dim, 0.0);
  for (std::size_t z = 0; z < dim; ++z) {
    if (s.one_hot()) {
      if (auto x = decode_onehot(z, g.num_vertices(), s.k)) cost[z] = cut_value(g, s.k, *x);
    } else {
      cost[z] = cut_value(g, s.k, decode_binary(z, g.num_vertices(), s.k));
    }
  }
  return cost;
}

}  // namespace kcut
