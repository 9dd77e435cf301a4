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


// File-first output: run reports as JSON, parameter tables and energy
// landscapes as CSV. Nothing here records wall-clock time, so reruns with
// the same configuration produce identical bytes.

#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "kcut/cut.hpp"
#include "kcut/graph.hpp"
#include "kcut/hamiltonian.hpp"
#include "kcut/qaoa.hpp"

namespace kcut {

inline constexpr const char* kRunFormat = "kcut-qaoa/run/1";

inline nlohmann::ordered_json schedule_to_json(const QaoaSchedule& s) {
  return {{"gammas", s.gammas}, {"betas", s.betas}};
}

inline nlohmann::ordered_json scheme_to_json(const EncodingScheme& s, std::size_t num_vertices) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind);
  j["k"] = s.k;
  j["qubits_per_vertex"] = s.qubits_per_vertex();
  j["work_qubits"] = s.work_qubits(num_vertices);
  if (s.kind == EncodingKind::OneHotPenaltyX) j["penalty_beta"] = s.penalty_beta;
  return j;
}

/// `source` names where the graph came from (a path or generator spec).
inline nlohmann::ordered_json run_to_json(const QaoaRun& run, const std::string& source) {
  nlohmann::ordered_json j;
  j["format"] = kRunFormat;
  j["graph"] = {{"source", source},
                {"num_vertices", run.num_vertices},
                {"num_edges", run.num_edges},
                {"total_weight", run.total_weight}};
  j["scheme"] = scheme_to_json(run.scheme, run.num_vertices);
  const auto& c = run.config;
  j["config"] = {{"p_max", c.p_max},
                 {"shots", c.shots},
                 {"seed", c.seed},
                 {"grid",
                  {{"gamma_max", c.grid.gamma_max},
                   {"beta_max", c.grid.beta_max},
                   {"n_gamma", c.grid.n_gamma},
                   {"n_beta", c.grid.n_beta}}},
                 {"optimizer",
                  {{"method", "nelder-mead"},
                   {"tol", c.optimizer.tol},
                   {"max_iter", c.optimizer.max_iter}}}};
  j["best_cut"] = run.best_cut;
  j["random_baseline"] = random_baseline(run.scheme.k);
  if (run.scheme.k <= 9) j["reference_guarantee"] = reference_ratio(run.scheme.k);
  j["grid_optimum"] = {{"gamma", run.grid.gamma}, {"beta", run.grid.beta}, {"energy", run.grid.energy}};
  auto depths = nlohmann::ordered_json::array();
  for (const auto& d : run.depths) {
    nlohmann::ordered_json e;
    e["p"] = d.depth;
    e["initial"] = schedule_to_json(d.initial);
    e["optimal"] = schedule_to_json(d.optimal);
    e["energy"] = d.energy;
    e["expected_cost"] = d.expected_cost;
    e["ratio"] = d.ratio;
    e["ratio_shots"] = d.ratio_shots;
    e["ratio_best_sample"] = d.ratio_best_sample;
    e["feasible_probability"] = d.feasible_probability;
    e["evaluations"] = d.evaluations;
    e["sample_seed"] = d.sample_seed;
    e["distinct_outcomes"] = d.samples.counts.size();
    depths.push_back(std::move(e));
  }
  j["depths"] = std::move(depths);
  return j;
}

/// One row per (depth, layer): initial and locally optimal angles.
inline void write_params_csv(const QaoaRun& run, const std::string& source, std::ostream& os) {
  os << "# source=" << source << " scheme=" << to_string(run.scheme.kind) << " k=" << run.scheme.k
     << " seed=" << run.config.seed << "\n";
  os << "p,layer,gamma_initial,beta_initial,gamma_optimal,beta_optimal\n";
  for (const auto& d : run.depths)
    for (std::size_t t = 0; t < d.depth; ++t)
      os << d.depth << ',' << t + 1 << ',' << detail::format_double(d.initial.gammas[t]) << ','
         << detail::format_double(d.initial.betas[t]) << ','
         << detail::format_double(d.optimal.gammas[t]) << ','
         << detail::format_double(d.optimal.betas[t]) << '\n';
}

/// Full p = 1 grid, `gamma,beta,energy` rows after '#' provenance lines.
inline void write_landscape_csv(const GridResult& grid, const std::string& provenance,
                                std::ostream& os) {
  os << "# " << provenance << "\n";
  os << "# grid " << grid.spec.n_gamma << "x" << grid.spec.n_beta
     << " gamma_max=" << detail::format_double(grid.spec.gamma_max)
     << " beta_max=" << detail::format_double(grid.spec.beta_max) << "\n";
  os << "gamma,beta,energy\n";
  for (std::size_t i = 0; i < grid.spec.n_gamma; ++i)
    for (std::size_t j = 0; j < grid.spec.n_beta; ++j)
      os << detail::format_double(grid.spec.gamma_at(i)) << ','
         << detail::format_double(grid.spec.beta_at(j)) << ','
         << detail::format_double(grid.energy_grid[i][j]) << '\n';
}

}  // namespace kcut
