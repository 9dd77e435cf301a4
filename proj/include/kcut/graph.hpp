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
 * Weighted undirected graphs, seeded random generators and the edge-list
 * text format.
 *
 * File format (LF line endings, whitespace separated):
 *
 *     # comment
 *     p <num_vertices> <num_edges>
 *     e <u> <v> <weight>
 *     ...
 */

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kcut/error.hpp"
#include "kcut/random.hpp"

namespace kcut {

struct Edge {
  std::size_t u;
  std::size_t v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable weighted undirected graph. Every edge satisfies u < v, there are
/// no duplicate pairs and all weights are finite.
class Graph {
 public:
  Graph() = default;

  /// Edges given as (u, v) with u > v are canonicalised to (v, u).
  Graph(std::size_t num_vertices, std::vector<Edge> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ == 0) throw ParameterError("graph needs at least one vertex");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto& e : edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u == e.v) throw ParameterError("self-loop on vertex " + std::to_string(e.u));
      if (e.v >= num_vertices_)
        throw ParameterError("vertex index " + std::to_string(e.v) + " out of range");
      if (!std::isfinite(e.w)) throw ParameterError("non-finite edge weight");
      if (!seen.emplace(e.u, e.v).second)
        throw ParameterError("duplicate edge (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ")");
    }
  }

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// True when every weight equals 1.
  bool unweighted() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

inline double total_weight(const Graph& g) {
  double sum = 0.0;
  for (const auto& e : g.edges()) sum += e.w;
  return sum;
}

/// Mean absolute edge weight; 0 for an edgeless graph.
inline double mean_abs_weight(const Graph& g) {
  if (g.num_edges() == 0) return 0.0;
  double sum = 0.0;
  for (const auto& e : g.edges()) sum += std::abs(e.w);
  return sum / static_cast<double>(g.num_edges());
}

/// Two vertices joined by a single unit-weight edge.
inline Graph barbell() { return Graph(2, {{0, 1, 1.0}}); }

struct WeightRange {
  double lo = 0.0;
  double hi = 1.0;
};

/// G(n, p): every unordered pair (u < v), visited in lexicographic order,
/// is kept when a uniform draw falls below p.
inline Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool weighted = false,
                             WeightRange range = {}) {
  if (n == 0) throw ParameterError("Erdos-Renyi graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.push_back({u, v, 1.0});
    }
  }
  // Weights are drawn in a second pass so that the topology for a given seed
  // does not depend on the weighted flag.
  if (weighted) {
    for (auto& e : edges) e.w = rng.uniform(range.lo, range.hi);
  }
  return Graph(n, std::move(edges));
}

/// Preferential attachment. Starts from m isolated vertices 0..m-1; each new
/// vertex v = m..n-1 attaches to m distinct earlier vertices, drawn one at a
/// time without replacement with probability proportional to degree + 1.
/// Degrees are updated after all m edges of v are placed, so |E| = m(n - m).
inline Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed,
                                 bool weighted = false, WeightRange range = {}) {
  if (m < 1 || m >= n) throw ParameterError("Barabasi-Albert needs 1 <= m < n");
  Rng rng(seed);
  std::vector<double> degree(n, 0.0);
  std::vector<Edge> edges;
  edges.reserve(m * (n - m));
  for (std::size_t v = m; v < n; ++v) {
    std::vector<std::size_t> pool(v);
    for (std::size_t i = 0; i < v; ++i) pool[i] = i;
    std::vector<std::size_t> targets;
    for (std::size_t draw = 0; draw < m; ++draw) {
      double mass = 0.0;
      for (auto c : pool) mass += degree[c] + 1.0;
      double r = rng.uniform() * mass;
      std::size_t pick = pool.size() - 1;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        r -= degree[pool[i]] + 1.0;
        if (r < 0.0) {
          pick = i;
          break;
        }
      }
      targets.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    std::sort(targets.begin(), targets.end());
    for (auto t : targets) {
      edges.push_back({t, v, 1.0});
      degree[t] += 1.0;
      degree[v] += 1.0;
    }
  }
  if (weighted) {
    for (auto& e : edges) e.w = rng.uniform(range.lo, range.hi);
  }
  return Graph(n, std::move(edges));
}

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline bool parse_size(const std::string& tok, std::size_t& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

inline bool parse_double(const std::string& tok, double& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

}  // namespace detail

inline void write_graph(const Graph& g, std::ostream& os) {
  os << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges())
    os << "e " << e.u << ' ' << e.v << ' ' << detail::format_double(e.w) << '\n';
}

inline Graph parse_graph(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate 'p' header");
      if (tok.size() != 3 || !detail::parse_size(tok[1], n) || !detail::parse_size(tok[2], m))
        throw ParseError(lineno, "expected 'p <num_vertices> <num_edges>'");
      if (n == 0) throw ParseError(lineno, "graph needs at least one vertex");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge before 'p' header");
      Edge e{};
      if (tok.size() != 4 || !detail::parse_size(tok[1], e.u) || !detail::parse_size(tok[2], e.v) ||
          !detail::parse_double(tok[3], e.w))
        throw ParseError(lineno, "expected 'e <u> <v> <weight>'");
      if (e.u >= n || e.v >= n) throw ParseError(lineno, "vertex index out of range");
      if (e.u == e.v) throw ParseError(lineno, "self-loop");
      if (!std::isfinite(e.w)) throw ParseError(lineno, "non-finite weight");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!seen.emplace(e.u, e.v).second) throw ParseError(lineno, "duplicate edge");
      edges.push_back(e);
    } else {
      throw ParseError(lineno, "unknown record '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p' header");
  if (edges.size() != m)
    throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

inline Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

inline void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write graph file '" + path + "'");
  write_graph(g, out);
}

}  // namespace kcut
