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
 * QAOA for MAX k-CUT: layered evolution, exact and sampled cost, p = 1
 * grid search, depth extension by linear interpolation of the previous
 * optimum, and Nelder-Mead refinement.
 *
 * The optimizer minimises the energy <H> of the scheme's phase-separating
 * diagonal (penalty included for OneHotPenaltyX). Reported approximation
 * ratios use the classical cut value of each basis state, with infeasible
 * one-hot states counting as zero.
 */

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "kcut/cut.hpp"
#include "kcut/error.hpp"
#include "kcut/graph.hpp"
#include "kcut/hamiltonian.hpp"
#include "kcut/optimize.hpp"
#include "kcut/statevector.hpp"

namespace kcut {

struct QaoaSchedule {
  std::vector<double> gammas;
  std::vector<double> betas;

  std::size_t depth() const noexcept { return gammas.size(); }

  void validate() const {
    if (gammas.size() != betas.size()) throw ParameterError("gamma/beta length mismatch");
    for (double v : gammas)
      if (!std::isfinite(v)) throw ParameterError("non-finite gamma");
    for (double v : betas)
      if (!std::isfinite(v)) throw ParameterError("non-finite beta");
  }

  /// Optimizer layout: gammas first, then betas.
  std::vector<double> flatten() const {
    auto x = gammas;
    x.insert(x.end(), betas.begin(), betas.end());
    return x;
  }

  static QaoaSchedule unflatten(const std::vector<double>& x) {
    if (x.size() % 2) throw ParameterError("parameter vector must have even length");
    const auto p = static_cast<std::ptrdiff_t>(x.size() / 2);
    return {{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
  }
};

/// Everything about an instance that does not change across parameter
/// evaluations.
class QaoaProblem {
 public:
  QaoaProblem(Graph g, EncodingScheme scheme, unsigned budget = kDefaultQubitBudget)
      : graph_(std::move(g)), scheme_(scheme), budget_(budget) {
    n_qubits_ = scheme_.work_qubits(graph_.num_vertices());
    check_budget(n_qubits_, budget_);
    if (scheme_.kind == EncodingKind::OneHotPenaltyX) check_penalty(graph_, scheme_);
    diagonal_ = build_problem_diagonal(graph_, scheme_, budget_);
    cost_ = cost_vector(graph_, scheme_, budget_);
    initial_ = scheme_.kind == EncodingKind::OneHotXY
                   ? prepare_wk_product(scheme_.k, graph_.num_vertices(), budget_)
                   : prepare_plus(n_qubits_, budget_);
  }

  const Graph& graph() const noexcept { return graph_; }
  const EncodingScheme& scheme() const noexcept { return scheme_; }
  unsigned n_qubits() const noexcept { return n_qubits_; }
  const DiagonalHamiltonian& diagonal() const noexcept { return diagonal_; }
  const std::vector<double>& cost() const noexcept { return cost_; }
  const Statevector& initial_state() const noexcept { return initial_; }

  /// Optimal cut value, computed on first use by exhaustive search.
  double best_cut() const {
    if (!best_) best_ = brute_force(graph_, scheme_.k).best_value;
    return *best_;
  }

  void apply_mixer(Statevector& s, double beta) const {
    if (scheme_.kind == EncodingKind::OneHotXY) {
      const auto parts = xy_pairs();
      for (std::size_t v = 0; v < graph_.num_vertices(); ++v) {
        const unsigned base = static_cast<unsigned>(v) * scheme_.k;
        for (const auto& [a, b] : parts.first) apply_xy_pair(s, base + a, base + b, beta);
        for (const auto& [a, b] : parts.second) apply_xy_pair(s, base + a, base + b, beta);
      }
    } else {
      for (unsigned q = 0; q < n_qubits_; ++q) apply_rx(s, q, beta);
    }
  }

  Statevector evolve(const QaoaSchedule& schedule) const {
    schedule.validate();
    Statevector s = initial_;
    for (std::size_t t = 0; t < schedule.depth(); ++t) {
      apply_diagonal_phase(s, diagonal_, schedule.gammas[t]);
      apply_mixer(s, schedule.betas[t]);
    }
    return s;
  }

  double energy(const QaoaSchedule& schedule) const { return expectation(evolve(schedule), diagonal_); }

  double expected_cost(const Statevector& s) const { return expectation(s, cost_); }

 private:
  using PairList = std::vector<std::pair<unsigned, unsigned>>;

  /// Odd then even ring pairs, zero-based positions inside a group.
  std::pair<PairList, PairList> xy_pairs() const {
    PairList odd, even;
    for (unsigned a = 0; a < scheme_.k; ++a) {
      const unsigned b = (a + 1) % scheme_.k;
      if (a % 2 == 0 && a + 1 < scheme_.k)
        odd.emplace_back(a, b);
      else
        even.emplace_back(a, b);
    }
    return {odd, even};
  }

  Graph graph_;
  EncodingScheme scheme_;
  unsigned budget_;
  unsigned n_qubits_ = 0;
  DiagonalHamiltonian diagonal_;
  std::vector<double> cost_;
  Statevector initial_;
  mutable std::optional<double> best_;
};

inline Statevector evolve(const Graph& g, const EncodingScheme& scheme,
                          const QaoaSchedule& schedule) {
  return QaoaProblem(g, scheme).evolve(schedule);
}

/// Expected classical cut value of measuring the state.
inline double expected_cost(const Statevector& s, const Graph& g, const EncodingScheme& scheme) {
  if (s.n_qubits() != scheme.work_qubits(g.num_vertices()))
    throw ParameterError("state does not match the scheme's qubit layout");
  return expectation(s, cost_vector(g, scheme));
}

/// value / optimum, defined as 1 when the optimum is 0.
inline double approximation_ratio(double value, double best_cut) {
  return best_cut == 0.0 ? 1.0 : value / best_cut;
}

struct GridSpec {
  double gamma_max = 2.0 * std::numbers::pi;
  double beta_max = std::numbers::pi;
  std::size_t n_gamma = 20;
  std::size_t n_beta = 20;

  /// 2 pi for unit weights, 2 pi / mean|w| otherwise.
  static GridSpec defaults_for(const Graph& g) {
    GridSpec s;
    if (!g.unweighted() && mean_abs_weight(g) > 0.0) s.gamma_max /= mean_abs_weight(g);
    return s;
  }

  double gamma_at(std::size_t i) const {
    return gamma_max * static_cast<double>(i) / static_cast<double>(n_gamma - 1);
  }
  double beta_at(std::size_t j) const {
    return beta_max * static_cast<double>(j) / static_cast<double>(n_beta - 1);
  }
};

struct GridResult {
  double gamma = 0.0;
  double beta = 0.0;
  double energy = 0.0;
  GridSpec spec;
  /// energy[i][j] at (gamma_at(i), beta_at(j)).
  std::vector<std::vector<double>> energy_grid;
};

/// Exact p = 1 energy on a closed grid over [0, gamma_max] x [0, beta_max].
/// The lowest node wins; ties keep the smallest (gamma, beta).
inline GridResult grid_search_p1(const QaoaProblem& problem, const GridSpec& spec) {
  if (spec.n_gamma < 2 || spec.n_beta < 2) throw ParameterError("grid needs at least 2x2 nodes");
  GridResult r;
  r.spec = spec;
  r.energy = std::numeric_limits<double>::infinity();
  r.energy_grid.assign(spec.n_gamma, std::vector<double>(spec.n_beta, 0.0));
  for (std::size_t i = 0; i < spec.n_gamma; ++i) {
    // The phase layer is shared by the whole grid row.
    Statevector phased = problem.initial_state();
    apply_diagonal_phase(phased, problem.diagonal(), spec.gamma_at(i));
    for (std::size_t j = 0; j < spec.n_beta; ++j) {
      Statevector s = phased;
      problem.apply_mixer(s, spec.beta_at(j));
      const double e = expectation(s, problem.diagonal());
      r.energy_grid[i][j] = e;
      if (e < r.energy) {
        r.energy = e;
        r.gamma = spec.gamma_at(i);
        r.beta = spec.beta_at(j);
      }
    }
  }
  return r;
}

/// Seeds depth p + 1 from the depth-p optimum:
///   out_i = (i-1)/p * in_{i-1} + (p-i+1)/p * in_i,  i = 1..p+1,
/// with in_0 = in_{p+1} = 0.
inline std::vector<double> interpolate(const std::vector<double>& params) {
  if (params.empty()) throw ParameterError("interpolation needs at least one parameter");
  const std::size_t p = params.size();
  auto at = [&](std::size_t i) { return (i >= 1 && i <= p) ? params[i - 1] : 0.0; };
  std::vector<double> out(p + 1);
  const double dp = static_cast<double>(p);
  for (std::size_t i = 1; i <= p + 1; ++i)
    out[i - 1] = static_cast<double>(i - 1) / dp * at(i - 1) +
                 static_cast<double>(p - i + 1) / dp * at(i);
  return out;
}

struct RunConfig {
  std::size_t p_max = 3;
  GridSpec grid;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  NelderMeadOptions optimizer;
};

struct DepthResult {
  std::size_t depth = 0;
  QaoaSchedule initial;
  QaoaSchedule optimal;
  double energy = 0.0;
  double expected_cost = 0.0;
  double ratio = 0.0;
  double ratio_shots = 0.0;
  double ratio_best_sample = 0.0;
  /// Probability of measuring a valid coloring (always 1 for binary).
  double feasible_probability = 1.0;
  std::size_t evaluations = 0;
  std::uint64_t sample_seed = 0;
  SampleSet samples;
  double seconds = 0.0;
};

struct QaoaRun {
  EncodingScheme scheme;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  double total_weight = 0.0;
  double best_cut = 0.0;
  RunConfig config;
  GridResult grid;
  std::vector<DepthResult> depths;
};

namespace detail {

inline void finish_depth(const QaoaProblem& problem, const RunConfig& cfg, DepthResult& d) {
  const auto state = problem.evolve(d.optimal);
  d.expected_cost = problem.expected_cost(state);
  d.ratio = approximation_ratio(d.expected_cost, problem.best_cut());
  d.sample_seed = cfg.seed + d.depth;
  d.samples = sample(state, cfg.shots, d.sample_seed);
  d.ratio_shots = approximation_ratio(d.samples.mean(problem.cost()), problem.best_cut());
  double best_sample = 0.0;
  for (const auto& [z, c] : d.samples.counts) best_sample = std::max(best_sample, problem.cost()[z]);
  d.ratio_best_sample = approximation_ratio(best_sample, problem.best_cut());
  if (problem.scheme().one_hot()) {
    double feasible = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z)
      if (decode_onehot(z, problem.graph().num_vertices(), problem.scheme().k))
        feasible += std::norm(amps[z]);
    d.feasible_probability = feasible;
  }
}

}  // namespace detail

/// Depth 1 from the grid optimum, every later depth from the interpolated
/// previous optimum, each refined by Nelder-Mead.
inline QaoaRun run_qaoa(const QaoaProblem& problem, const RunConfig& cfg) {
  if (cfg.p_max < 1) throw ParameterError("p_max must be at least 1");
  if (cfg.shots < 1) throw ParameterError("shots must be at least 1");
  using clock = std::chrono::steady_clock;
  QaoaRun run;
  run.scheme = problem.scheme();
  run.num_vertices = problem.graph().num_vertices();
  run.num_edges = problem.graph().num_edges();
  run.total_weight = total_weight(problem.graph());
  run.best_cut = problem.best_cut();
  run.config = cfg;

  auto objective = [&](const std::vector<double>& x) {
    return problem.energy(QaoaSchedule::unflatten(x));
  };

  for (std::size_t p = 1; p <= cfg.p_max; ++p) {
    const auto start = clock::now();
    DepthResult d;
    d.depth = p;
    if (p == 1) {
      run.grid = grid_search_p1(problem, cfg.grid);
      d.initial = {{run.grid.gamma}, {run.grid.beta}};
    } else {
      const auto& prev = run.depths.back().optimal;
      d.initial = {interpolate(prev.gammas), interpolate(prev.betas)};
    }
    const auto nm = nelder_mead(objective, d.initial.flatten(), cfg.optimizer);
    d.optimal = QaoaSchedule::unflatten(nm.x);
    d.energy = nm.f;
    d.evaluations = nm.evaluations;
    detail::finish_depth(problem, cfg, d);
    d.seconds = std::chrono::duration<double>(clock::now() - start).count();
    run.depths.push_back(std::move(d));
  }
  return run;
}

}  // namespace kcut
