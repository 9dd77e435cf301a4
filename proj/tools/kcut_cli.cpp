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


// kcut: command-line front end for the MAX k-CUT QAOA library.
//
//   kcut solve      --graph barbell --k 3 --scheme binary --p 3 --out run/
//   kcut landscape  --graph er:10,0.36 --seed 11 --k 2 --out land/
//   kcut resources  --graph er:10,0.36 --seed 11
//   kcut brute-force --graph path/to/graph.txt --k 3
//
// Exit codes: 0 success, 1 usage or input error, 2 capacity, 3 verification.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kcut/kcut.hpp"

namespace fs = std::filesystem;
using namespace kcut;

namespace {

struct Options {
  std::string graph = "barbell";
  bool weighted = false;
  unsigned k = 2;
  std::string scheme = "binary";
  std::size_t p = 1;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  std::string grid = "20x20";
  std::optional<double> gamma_max;
  std::optional<double> beta_max;
  std::optional<double> penalty_beta;
  std::string out = ".";
  unsigned k_min = 2;
  unsigned k_max = 8;
  bool all_schemes = true;
  double gamma = 0.1;
  bool compiled = true;
  std::vector<double> gammas;
  std::vector<double> betas;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

/// path | barbell | er:n,p | ba:n,m; generators use the global seed.
Graph load_graph(const Options& o) {
  auto spec_error = [&] { return ParameterError("bad graph spec '" + o.graph + "'"); };
  if (o.graph == "barbell") return barbell();
  if (o.graph.starts_with("er:") || o.graph.starts_with("ba:")) {
    const auto args = split(o.graph.substr(3), ',');
    std::size_t n = 0;
    if (args.size() != 2 || !detail::parse_size(args[0], n)) throw spec_error();
    if (o.graph[0] == 'e') {
      double p = 0.0;
      if (!detail::parse_double(args[1], p)) throw spec_error();
      return gen_erdos_renyi(n, p, o.seed, o.weighted);
    }
    std::size_t m = 0;
    if (!detail::parse_size(args[1], m)) throw spec_error();
    return gen_barabasi_albert(n, m, o.seed, o.weighted);
  }
  return read_graph(o.graph);
}

GridSpec grid_spec(const Options& o, const Graph& g) {
  GridSpec s = GridSpec::defaults_for(g);
  const auto dims = split(o.grid, 'x');
  if (dims.size() != 2 || !detail::parse_size(dims[0], s.n_gamma) ||
      !detail::parse_size(dims[1], s.n_beta))
    throw ParameterError("--grid expects <n_gamma>x<n_beta>, got '" + o.grid + "'");
  if (o.gamma_max) s.gamma_max = *o.gamma_max;
  if (o.beta_max) s.beta_max = *o.beta_max;
  return s;
}

EncodingScheme scheme_of(const Options& o, const Graph& g) {
  return make_scheme(parse_encoding(o.scheme), o.k, g, o.penalty_beta);
}

std::string provenance(const Options& o, const EncodingScheme& s) {
  std::ostringstream os;
  os << "graph=" << o.graph << " weighted=" << o.weighted << " k=" << s.k
     << " scheme=" << to_string(s.kind) << " seed=" << o.seed;
  if (s.kind == EncodingKind::OneHotPenaltyX) os << " penalty_beta=" << detail::format_double(s.penalty_beta);
  return os.str();
}

std::ofstream open_out(const Options& o, const std::string& name) {
  fs::create_directories(o.out);
  const auto path = fs::path(o.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + path.string() + "'");
  return f;
}

int cmd_solve(const Options& o) {
  const auto g = load_graph(o);
  const QaoaProblem problem(g, scheme_of(o, g));
  RunConfig cfg;
  cfg.p_max = o.p;
  cfg.grid = grid_spec(o, g);
  cfg.shots = o.shots;
  cfg.seed = o.seed;
  const auto run = run_qaoa(problem, cfg);
  std::string source = o.graph;
  if (o.weighted) source += " (weighted)";
  open_out(o, "run.json") << run_to_json(run, source).dump(2) << '\n';
  auto params = open_out(o, "params.csv");
  write_params_csv(run, source, params);

  std::cout << provenance(o, problem.scheme()) << "\n";
  std::cout << "C* = " << run.best_cut << "  random baseline = " << random_baseline(o.k) << "\n";
  std::cout << " p    ratio  ratio_shots  best_sample     energy  evals  seconds\n";
  for (const auto& d : run.depths)
    std::cout << std::setw(2) << d.depth << std::fixed << std::setprecision(3) << std::setw(9) << d.ratio
              << std::setw(13) << d.ratio_shots << std::setw(13) << d.ratio_best_sample
              << std::setprecision(4) << std::setw(11) << d.energy << std::setw(7) << d.evaluations
              << std::setprecision(2) << std::setw(9) << d.seconds << '\n';
  std::cout << "alpha:";
  for (const auto& d : run.depths) std::cout << ' ' << std::setprecision(3) << d.ratio;
  std::cout << '\n';
  return 0;
}

int cmd_landscape(const Options& o) {
  if (o.p != 1) throw ParameterError("landscape is defined for p = 1 only");
  const auto g = load_graph(o);
  const QaoaProblem problem(g, scheme_of(o, g));
  const auto grid = grid_search_p1(problem, grid_spec(o, g));
  auto f = open_out(o, "landscape.csv");
  write_landscape_csv(grid, provenance(o, problem.scheme()), f);
  std::cout << "grid minimum: gamma=" << grid.gamma << " beta=" << grid.beta
            << " energy=" << grid.energy << "\n";
  return 0;
}

int cmd_resources(const Options& o) {
  const auto g = load_graph(o);
  std::vector<EncodingKind> kinds;
  if (o.all_schemes)
    kinds = {EncodingKind::Binary, EncodingKind::OneHotX, EncodingKind::OneHotPenaltyX,
             EncodingKind::OneHotXY};
  else
    kinds = {parse_encoding(o.scheme)};
  if (o.k_min < 2 || o.k_max < o.k_min) throw ParameterError("need 2 <= k-min <= k-max");
  std::cout << "|V|=" << g.num_vertices() << " |E|=" << g.num_edges() << "\n";
  std::cout << std::left << std::setw(16) << "scheme" << std::right << std::setw(3) << "k"
            << std::setw(8) << "qubits" << std::setw(9) << "cx_init" << std::setw(10) << "cx_mixer"
            << std::setw(10) << "cx_phase" << std::setw(13) << "cx_per_layer" << "\n";
  for (auto kind : kinds)
    for (unsigned k = o.k_min; k <= o.k_max; ++k) {
      const auto r = count_resources(g, k, kind);
      std::cout << std::left << std::setw(16) << to_string(kind) << std::right << std::setw(3) << k
                << std::setw(8) << r.qubits_total << std::setw(9) << r.cx_init << std::setw(10)
                << r.cx_mixer_per_layer << std::setw(10) << r.cx_phase_per_layer << std::setw(13)
                << r.cx_per_layer() << "\n";
    }
  return 0;
}

int cmd_brute_force(const Options& o) {
  const auto g = load_graph(o);
  const auto r = brute_force(g, o.k);
  std::cout << "best " << detail::format_double(r.best_value) << "\nassignment";
  for (auto c : r.best_assignment) std::cout << ' ' << c;
  std::cout << "\nevaluated " << r.evaluated << "\n";
  return 0;
}

int cmd_generate(const Options& o) {
  const auto g = load_graph(o);
  std::ostringstream os;
  os << "# " << o.graph << " seed=" << o.seed << (o.weighted ? " weighted" : "") << "\n";
  write_graph(g, os);
  if (o.out == "-" || o.out == ".") {
    std::cout << os.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ParameterError("cannot write '" + o.out + "'");
    f << os.str();
  }
  return 0;
}

int cmd_circuit(const Options& o) {
  const auto g = load_graph(o);
  const auto scheme = scheme_of(o, g);
  auto c = build_phase_circuit(g, scheme, o.gamma);
  if (o.compiled) {
    c = decompose(c);
    if (c.total_qubits() <= kVerifyQubitLimit) {
      const double dev = verify_against_diagonal(c, build_problem_diagonal(g, scheme), o.gamma);
      if (dev > 1e-10)
        throw VerificationError(0, "compiled circuit deviates from the diagonal by " + std::to_string(dev));
    }
  }
  write_circuit(c, std::cout);
  return 0;
}

int cmd_diagonal(const Options& o) {
  const auto g = load_graph(o);
  const auto scheme = scheme_of(o, g);
  const auto d = build_problem_diagonal(g, scheme);
  const auto cost = cost_vector(g, scheme);
  auto f = open_out(o, "diagonal.csv");
  f << "# " << provenance(o, scheme) << "\nindex,value,cut\n";
  for (std::size_t z = 0; z < d.size(); ++z)
    f << z << ',' << detail::format_double(d[z]) << ',' << detail::format_double(cost[z]) << '\n';
  return 0;
}

int cmd_probabilities(const Options& o) {
  const auto g = load_graph(o);
  const QaoaProblem problem(g, scheme_of(o, g));
  const auto s = problem.evolve({o.gammas, o.betas});
  auto f = open_out(o, "probabilities.csv");
  f << "# " << provenance(o, problem.scheme()) << "\nindex,probability\n";
  const auto probs = s.probabilities();
  for (std::size_t z = 0; z < probs.size(); ++z) f << z << ',' << detail::format_double(probs[z]) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA for weighted MAX k-CUT"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "path | barbell | er:n,p | ba:n,m")->capture_default_str();
    sub->add_flag("--weighted", o.weighted, "uniform [0,1) weights for generated graphs");
    sub->add_option("--seed", o.seed, "global seed")->capture_default_str();
  };
  auto add_problem = [&](CLI::App* sub) {
    add_graph(sub);
    sub->add_option("--k", o.k, "number of colors")->check(CLI::Range(2u, 64u))->capture_default_str();
    sub->add_option("--scheme", o.scheme, "binary | onehot-x | onehot-penalty | onehot-xy")
        ->capture_default_str();
    sub->add_option("--penalty-beta", o.penalty_beta, "penalty weight for onehot-penalty");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "p = 1 grid as <n_gamma>x<n_beta>")->capture_default_str();
    sub->add_option("--gamma-max", o.gamma_max, "grid gamma range (default 2 pi / mean|w|)");
    sub->add_option("--beta-max", o.beta_max, "grid beta range (default pi)");
    sub->add_option("--out", o.out, "output directory")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "optimize depths 1..p, write run.json and params.csv");
  add_problem(solve);
  add_grid(solve);
  solve->add_option("--p", o.p, "maximum depth")->check(CLI::PositiveNumber)->capture_default_str();
  solve->add_option("--shots", o.shots, "measurement shots per depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* landscape = app.add_subcommand("landscape", "p = 1 energy grid as CSV");
  add_problem(landscape);
  add_grid(landscape);
  landscape->add_option("--p", o.p, "must be 1")->capture_default_str();

  auto* resources = app.add_subcommand("resources", "qubit and CX counts per scheme and k");
  add_graph(resources);
  auto* scheme_opt = resources->add_option("--scheme", o.scheme, "restrict to one scheme");
  resources->add_option("--k-min", o.k_min)->capture_default_str();
  resources->add_option("--k-max", o.k_max)->capture_default_str();

  auto* brute = app.add_subcommand("brute-force", "exact optimum by enumeration");
  add_graph(brute);
  brute->add_option("--k", o.k)->check(CLI::Range(1u, 64u))->capture_default_str();

  auto* generate = app.add_subcommand("generate", "write a graph in edge-list format");
  add_graph(generate);
  generate->add_option("--out", o.out, "file (default stdout)");

  auto* circuit = app.add_subcommand("circuit", "print the phase-separator circuit");
  add_problem(circuit);
  circuit->add_option("--gamma", o.gamma)->capture_default_str();
  circuit->add_flag("!--raw", o.compiled, "keep multi-controlled gates (no lowering)");

  auto* diagonal = app.add_subcommand("diagonal", "dump the problem diagonal as CSV");
  add_problem(diagonal);
  diagonal->add_option("--out", o.out, "output directory")->capture_default_str();

  auto* probabilities = app.add_subcommand("probabilities", "dump |amplitude|^2 after evolution");
  add_problem(probabilities);
  probabilities->add_option("--gammas", o.gammas)->delimiter(',')->required();
  probabilities->add_option("--betas", o.betas)->delimiter(',')->required();
  probabilities->add_option("--out", o.out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  o.all_schemes = scheme_opt->count() == 0;

  try {
    if (*solve) return cmd_solve(o);
    if (*landscape) return cmd_landscape(o);
    if (*resources) return cmd_resources(o);
    if (*brute) return cmd_brute_force(o);
    if (*generate) return cmd_generate(o);
    if (*circuit) return cmd_circuit(o);
    if (*diagonal) return cmd_diagonal(o);
    if (*probabilities) return cmd_probabilities(o);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed at basis state " << e.basis_index() << ": " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error, line " << e.line() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
