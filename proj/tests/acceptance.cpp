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


// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// values and the wall time. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "kcut/kcut.hpp"

using namespace kcut;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

double enumerate_best(const Graph& g, unsigned k) {
  const std::size_t n = g.num_vertices();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  double best = 0.0;
  ColorAssignment x(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= k) x[i] = static_cast<unsigned>(c % k);
    double v = 0.0;
    for (const auto& e : g.edges())
      if (x[e.u] != x[e.v]) v += e.w;
    best = std::max(best, v);
  }
  return best;
}

// Random graph with weights on a 1/8 grid so every sum is exact.
Graph dyadic_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < 0.6) edges.push_back({u, v, std::floor(rng.uniform(0.0, 4.0) * 8.0) / 8.0 + 0.125});
  return Graph(n, std::move(edges));
}

double leakage(const Statevector& s, std::size_t nv, unsigned k) {
  double out = 0.0;
  for (std::size_t z = 0; z < s.size(); ++z)
    if (!decode_onehot(z, nv, k)) out += std::norm(s[z]);
  return out;
}

RunConfig default_run(std::size_t p_max) {
  RunConfig cfg;
  cfg.p_max = p_max;
  return cfg;
}

void c1_hamiltonian(Outcome& o) {
  using M = std::vector<std::vector<int>>;
  const M d2{{1, -1}, {-1, 1}};
  const M d3{{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, 1}, {-1, -1, 1, 1}};
  const M d4{{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}};
  const M* want[] = {&d2, &d3, &d4};
  for (unsigned k = 2; k <= 4; ++k) {
    const M& d = *want[k - 2];
    o.require(build_D(k) == d, "D(" + std::to_string(k) + ")");
    // Barbell diagonal entry (l0, l1) is D[l0][l1], row-major.
    std::vector<double> flat;
    for (const auto& row : d)
      for (int v : row) flat.push_back(v);
    o.require(build_binary_diagonal(barbell(), k).values() == flat, "barbell diagonal k=" + std::to_string(k));
  }
  o.detail << "D and barbell diagonals for k=2,3,4 match exactly";
}

void c2_oracles(Outcome& o) {
  std::size_t states = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 5;
    const unsigned k = 2 + static_cast<unsigned>((i / 5) % 4);
    const auto g = dyadic_graph(n, 1000 + i);
    const auto d = build_binary_diagonal(g, k);
    const double W = total_weight(g);
    for (std::uint64_t z = 0; z < d.size(); ++z, ++states)
      if ((W - d[z]) / 2.0 != cut_value(g, k, decode_binary(z, n, k))) {
        o.require(false, "graph " + std::to_string(i) + " state " + std::to_string(z));
        break;
      }
    o.require(brute_force(g, k).best_value == enumerate_best(g, k), "brute force graph " + std::to_string(i));
  }
  o.detail << "200 graphs, " << states << " basis states, exact agreement";
}

void c3_resources(Outcome& o) {
  const auto g = read_graph(KCUT_TEST_DATA "/er10_p036_s11.txt");
  const std::size_t V = g.num_vertices(), E = g.num_edges();
  const std::size_t per_edge[] = {2, 70, 6, 206, 142, 78, 14};
  std::ostringstream got;
  for (unsigned k = 2; k <= 8; ++k) {
    const auto edge = decompose(build_binary_phase_circuit(barbell(), k, 0.3)).cx_count();
    got << (k > 2 ? "," : "") << edge;
    o.require(edge == per_edge[k - 2], "binary per-edge k=" + std::to_string(k));
    const auto b = count_resources(g, k, EncodingKind::Binary);
    o.require(b.cx_phase_per_layer == per_edge[k - 2] * E && b.cx_mixer_per_layer == 0 && b.cx_init == 0,
              "binary totals k=" + std::to_string(k));
    o.require(b.qubits_total == bits_for(k) * V + (is_power_of_two(k) ? 0 : 2),
              "binary qubits k=" + std::to_string(k));
    const auto xy = count_resources(g, k, EncodingKind::OneHotXY);
    o.require(xy.cx_phase_per_layer == 2 * k * E, "one-hot U_P k=" + std::to_string(k));
    o.require(xy.cx_mixer_per_layer == 4 * k * V, "XY mixer k=" + std::to_string(k));
    o.require(xy.cx_init == 2 * (k - 1) * V, "W_k prep k=" + std::to_string(k));
    o.require(decompose(build_wk_prep_circuit(k)).cx_count() == 2 * (k - 1), "W_k circuit k=" + std::to_string(k));
    const auto x = count_resources(g, k, EncodingKind::OneHotX);
    o.require(x.cx_phase_per_layer == 2 * k * E && x.cx_mixer_per_layer == 0 && x.qubits_total == k * V,
              "one-hot X k=" + std::to_string(k));
  }
  o.detail << "binary per-edge CX (" << got.str() << "); one-hot 2k|E|, XY 4k|V|, W_k 2(k-1)|V|";
}

void c4_equivalence(Outcome& o) {
  Rng rng(4);
  double worst = 0.0;
  for (unsigned k = 2; k <= 8; ++k)
    for (std::size_t edges = 1; edges <= 2; ++edges) {
      std::vector<Edge> list{{0, 1, rng.uniform(0.05, 2.0)}};
      if (edges == 2) list.push_back({1, 2, rng.uniform(0.05, 2.0)});
      const Graph g(edges + 1, list);
      const double gamma = rng.uniform(-4.0, 4.0);
      try {
        const auto c = decompose(build_binary_phase_circuit(g, k, gamma));
        o.require(c.is_compiled(), "compiled basis");
        worst = std::max(worst, verify_against_diagonal(c, build_binary_diagonal(g, k), gamma));
      } catch (const VerificationError& e) {
        o.require(false, std::string("k=") + std::to_string(k) + ": " + e.what());
      }
    }
  o.require(worst < 1e-10, "deviation below 1e-10");
  o.detail << "k=2..8, 1 and 2 edges, max deviation " << worst;
}

void c5_barbell(Outcome& o) {
  const double reference_binary[] = {1.000, 0.961, 1.000, 0.931, 0.981, 0.996, 1.000};
  const Graph g = barbell();
  auto alpha1 = [&](EncodingKind kind, unsigned k) {
    return run_qaoa(QaoaProblem(g, make_scheme(kind, k, g)), default_run(1)).depths[0].ratio;
  };
  char buf[64];
  o.detail << "binary";
  for (unsigned k = 2; k <= 8; ++k) {
    const double a = alpha1(EncodingKind::Binary, k);
    std::snprintf(buf, sizeof buf, " %.3f", a);
    o.detail << buf;
    o.require(std::abs(a - reference_binary[k - 2]) <= 0.03, "binary k=" + std::to_string(k));
  }
  o.detail << "; xy";
  for (unsigned k = 2; k <= 8; ++k) {
    const double a = alpha1(EncodingKind::OneHotXY, k);
    std::snprintf(buf, sizeof buf, " %.3f", a);
    o.detail << buf;
    o.require(a >= 0.99, "xy k=" + std::to_string(k));
  }
  const double x2 = alpha1(EncodingKind::OneHotX, 2);
  const double x3 = alpha1(EncodingKind::OneHotX, 3);
  std::snprintf(buf, sizeof buf, "; one-hot X k=2 %.3f, k=3 %.2e", x2, x3);
  o.detail << buf;
  o.require(x2 < 0.52, "one-hot X k=2 below 0.52");
  o.require(x3 < 0.12, "one-hot X k=3 below 0.12");
}

void c6_trend(Outcome& o) {
  const auto g = read_graph(KCUT_TEST_DATA "/er10_p036_s11.txt");
  for (unsigned k = 2; k <= 4; ++k) {
    const auto run = run_qaoa(QaoaProblem(g, make_scheme(EncodingKind::Binary, k, g)), default_run(3));
    const double base = random_baseline(k);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sk=%u %.3f/%.3f/%.3f", k > 2 ? "; " : "", k, run.depths[0].ratio,
                  run.depths[1].ratio, run.depths[2].ratio);
    o.detail << buf;
    const std::string tag = "k=" + std::to_string(k);
    for (std::size_t i = 0; i < 3; ++i) {
      o.require(run.depths[i].ratio >= base && run.depths[i].ratio <= 1.0, tag + " ratio in [baseline,1]");
      if (i > 0) o.require(run.depths[i].ratio >= run.depths[i - 1].ratio - 0.01, tag + " monotone");
    }
    o.require(run.depths[2].ratio >= base + 0.02, tag + " alpha_3 beats baseline by 0.02");
  }
}

void c7_properties(Outcome& o) {
  // Norm over 10^4 random gate applications.
  {
    Rng rng(77);
    auto s = prepare_plus(8);
    for (int i = 0; i < 10000; ++i) {
      const unsigned a = static_cast<unsigned>(rng.uniform() * 8) % 8;
      const unsigned b = (a + 1 + static_cast<unsigned>(rng.uniform() * 7) % 7) % 8;
      switch (i % 6) {
        case 0: apply_u3(s, a, rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)); break;
        case 1: apply_cx(s, a, b); break;
        case 2: apply_rx(s, a, rng.uniform(-4, 4)); break;
        case 3: apply_xy_pair(s, a, b, rng.uniform(-4, 4)); break;
        case 4: apply_x(s, a); break;
        default: {
          const unsigned ctl[] = {a};
          apply_controlled_phase(s, ctl, b, rng.uniform(-4, 4));
        }
      }
    }
    const double drift = std::abs(s.norm_squared() - 1.0);
    o.require(drift < 1e-12, "norm");
    o.detail << "norm drift " << drift;
  }
  // XY leakage across depth-3 runs, checked after every layer.
  {
    double worst = 0.0;
    for (unsigned k : {3u, 4u}) {
      const auto g = gen_erdos_renyi(3, 1.0, 1);
      const QaoaProblem p(g, make_scheme(EncodingKind::OneHotXY, k, g));
      const auto run = run_qaoa(p, default_run(3));
      for (const auto& d : run.depths) {
        auto s = p.initial_state();
        for (std::size_t t = 0; t < d.depth; ++t) {
          apply_diagonal_phase(s, p.diagonal(), d.optimal.gammas[t]);
          p.apply_mixer(s, d.optimal.betas[t]);
          worst = std::max(worst, leakage(s, 3, k));
        }
      }
    }
    o.require(worst < 1e-10, "XY leakage");
    o.detail << ", XY leakage " << worst;
  }
  // Interpolation closed forms.
  {
    const auto one = interpolate({0.4});
    const auto two = interpolate({0.3, 0.9});
    o.require(one == std::vector<double>{0.4, 0.4}, "interpolate p=1");
    o.require(two.size() == 3 && two[0] == 0.3 && std::abs(two[1] - 0.6) < 1e-15 && two[2] == 0.9,
              "interpolate p=2");
  }
  // gamma = 0 row and E >= min over the grid and random points.
  {
    double spread = 0.0;
    bool bounded = true;
    Rng rng(5);
    for (auto kind : {EncodingKind::Binary, EncodingKind::OneHotX, EncodingKind::OneHotXY}) {
      const auto g = gen_erdos_renyi(3, 0.8, 2, true);
      const QaoaProblem p(g, make_scheme(kind, 3, g));
      const auto grid = grid_search_p1(p, GridSpec::defaults_for(g));
      // Only the X mixer leaves the uniform start state invariant; the
      // partitioned XY product does move W_k within the feasible space.
      if (kind != EncodingKind::OneHotXY)
        for (double e : grid.energy_grid[0]) spread = std::max(spread, std::abs(e - grid.energy_grid[0][0]));
      const double emin = p.diagonal().min();
      for (const auto& row : grid.energy_grid)
        for (double e : row) bounded &= e >= emin - 1e-10;
      for (int t = 0; t < 50; ++t) {
        const QaoaSchedule s{{rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6)},
                             {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)}};
        bounded &= p.energy(s) >= emin - 1e-10;
      }
    }
    o.require(spread < 1e-10, "gamma=0 row constant");
    o.require(bounded, "E >= min diagonal");
    o.detail << ", gamma=0 spread " << spread;
  }
  // Fixed seed, identical bytes.
  {
    const auto g = gen_erdos_renyi(5, 0.6, 9, true);
    const QaoaProblem p(g, make_scheme(EncodingKind::Binary, 3, g));
    RunConfig cfg = default_run(2);
    cfg.seed = 31;
    const auto a = run_to_json(run_qaoa(p, cfg), "er:5,0.6").dump(2);
    const auto b = run_to_json(run_qaoa(p, cfg), "er:5,0.6").dump(2);
    o.require(a == b, "byte-identical run report");
    o.require(gen_barabasi_albert(10, 3, 8, true) == gen_barabasi_albert(10, 3, 8, true), "generator determinism");
  }
}

void c8_uniform(Outcome& o) {
  double worst = 0.0;
  for (unsigned k : {2u, 4u, 8u}) {
    const auto g = k == 8 ? gen_erdos_renyi(3, 1.0, 3, true) : gen_erdos_renyi(5, 0.6, k, true);
    const auto s = make_scheme(EncodingKind::Binary, k, g);
    const double e = expected_cost(prepare_plus(s.work_qubits(g.num_vertices())), g, s);
    worst = std::max(worst, std::abs(e - (1.0 - 1.0 / k) * total_weight(g)));
  }
  const Graph bb(2, {{0, 1, 1.75}});
  const double e3 = expected_cost(prepare_plus(4), bb, make_scheme(EncodingKind::Binary, 3, bb));
  worst = std::max(worst, std::abs(e3 - 0.625 * 1.75));
  o.require(worst < 1e-10, "uniform expectation");
  o.detail << "max deviation " << worst;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Hamiltonian fidelity", 1.0, c1_hamiltonian},
      {2, "Oracle consistency", 60.0, c2_oracles},
      {3, "Resource regression", 10.0, c3_resources},
      {4, "Circuit-diagonal equivalence", 60.0, c4_equivalence},
      {5, "Barbell reproduction", 300.0, c5_barbell},
      {6, "Depth trend on pinned ER fixture", 1800.0, c6_trend},
      {7, "Property suite", 300.0, c7_properties},
      {8, "Uniform-state expectations", 1.0, c8_uniform},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget_seconds) o.require(false, "runtime budget " + std::to_string(c.budget_seconds) + " s");
    failures += !o.pass;
    std::printf("[%s] criterion %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
