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
 * Gate-level circuits for the QAOA building blocks and their compilation
 * to the {U3, CX} basis.
 *
 * Builders emit an intermediate form that may contain X, multi-controlled
 * phase (MCPhase) and multi-controlled X (MCX) gates; decompose() lowers it
 * to U3 and CX only. Supported lowerings and their CX cost:
 *
 *   MCPhase, 0 controls        0   (single U3)
 *   MCPhase, 1 control         2   (CU1 identity)
 *   MCPhase, 2 controls        8   (three CU1(+-phi/2) and two CX)
 *   MCX, 1 control             1
 *   MCX, 2 controls            6   (exact Toffoli)
 *   MCX, 3 controls, relative  6   (C3X up to a diagonal phase; only legal
 *                                   in compute/uncompute pairs around
 *                                   diagonal gates)
 *
 * Binary phase separator for an edge (i, j) with theta = gamma * w:
 * a CX ladder folds label i into label j, the all-zero difference is
 * flagged with an X-conjugated multi-controlled phase, and the ladder is
 * undone. When k is not a power of two, labels k-1 .. 2^L-1 must behave as
 * one color. The extra phase needed on ordered pairs of distinct merged
 * labels is split into 2(2^L - k) blocks, each of the form "vertex i in
 * cube A and vertex j in cube B" with A, B aligned label cubes. Every block
 * computes two ancilla flags with MCX, applies a doubly controlled phase,
 * and uncomputes the flags (32 CX per block).
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kcut/error.hpp"
#include "kcut/graph.hpp"
#include "kcut/hamiltonian.hpp"
#include "kcut/statevector.hpp"

namespace kcut {

enum class GateKind { U3, X, CX, MCPhase, MCX };

struct Gate {
  GateKind kind = GateKind::U3;
  std::vector<unsigned> controls;
  unsigned target = 0;
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  /// MCX only: diagonal-phase-tolerant variant, and its inverse.
  bool relative_phase = false;
  bool adjoint = false;

  static Gate u3(unsigned q, double theta, double phi, double lambda) {
    return Gate{GateKind::U3, {}, q, theta, phi, lambda};
  }
  static Gate x(unsigned q) { return Gate{GateKind::X, {}, q}; }
  static Gate cx(unsigned c, unsigned t) { return Gate{GateKind::CX, {c}, t}; }
  static Gate mcphase(std::vector<unsigned> controls, unsigned t, double phi) {
    return Gate{GateKind::MCPhase, std::move(controls), t, 0.0, phi, 0.0};
  }
  static Gate mcx(std::vector<unsigned> controls, unsigned t, bool relative = false,
                  bool adjoint = false) {
    return Gate{GateKind::MCX, std::move(controls), t, 0.0, 0.0, 0.0, relative, adjoint};
  }

  std::vector<unsigned> operands() const {
    auto ops = controls;
    ops.push_back(target);
    return ops;
  }
};

struct Circuit {
  unsigned n_work_qubits = 0;
  unsigned n_ancillas = 0;
  std::vector<Gate> gates;

  unsigned total_qubits() const noexcept { return n_work_qubits + n_ancillas; }

  void add(Gate g) {
    const auto ops = g.operands();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (ops[i] >= total_qubits())
        throw ParameterError("gate operand " + std::to_string(ops[i]) + " out of range");
      for (std::size_t j = i + 1; j < ops.size(); ++j)
        if (ops[i] == ops[j]) throw ParameterError("gate operands must be distinct");
    }
    gates.push_back(std::move(g));
  }

  void append(const Circuit& other) {
    for (const auto& g : other.gates) add(g);
  }

  std::size_t count(GateKind kind) const {
    std::size_t n = 0;
    for (const auto& g : gates) n += g.kind == kind;
    return n;
  }

  std::size_t cx_count() const { return count(GateKind::CX); }

  /// Only U3 and CX remain.
  bool is_compiled() const {
    for (const auto& g : gates)
      if (g.kind != GateKind::U3 && g.kind != GateKind::CX) return false;
    return true;
  }
};

// --- lowering ---------------------------------------------------------------

namespace detail {

inline constexpr double kPi = std::numbers::pi;

inline Gate phase_gate(unsigned q, double phi) { return Gate::u3(q, 0.0, 0.0, phi); }
inline Gate hadamard(unsigned q) { return Gate::u3(q, kPi / 2.0, 0.0, kPi); }

inline void lower_cu1(std::vector<Gate>& out, unsigned c, unsigned t, double phi) {
  out.push_back(phase_gate(c, phi / 2.0));
  out.push_back(Gate::cx(c, t));
  out.push_back(phase_gate(t, -phi / 2.0));
  out.push_back(Gate::cx(c, t));
  out.push_back(phase_gate(t, phi / 2.0));
}

inline void lower_ccu1(std::vector<Gate>& out, unsigned c1, unsigned c2, unsigned t, double phi) {
  lower_cu1(out, c2, t, phi / 2.0);
  out.push_back(Gate::cx(c1, c2));
  lower_cu1(out, c2, t, -phi / 2.0);
  out.push_back(Gate::cx(c1, c2));
  lower_cu1(out, c1, t, phi / 2.0);
}

inline void lower_toffoli(std::vector<Gate>& out, unsigned c1, unsigned c2, unsigned t) {
  const double q = kPi / 4.0;
  out.push_back(hadamard(t));
  out.push_back(Gate::cx(c2, t));
  out.push_back(phase_gate(t, -q));
  out.push_back(Gate::cx(c1, t));
  out.push_back(phase_gate(t, q));
  out.push_back(Gate::cx(c2, t));
  out.push_back(phase_gate(t, -q));
  out.push_back(Gate::cx(c1, t));
  out.push_back(phase_gate(c2, q));
  out.push_back(phase_gate(t, q));
  out.push_back(hadamard(t));
  out.push_back(Gate::cx(c1, c2));
  out.push_back(phase_gate(c1, q));
  out.push_back(phase_gate(c2, -q));
  out.push_back(Gate::cx(c1, c2));
}

/// C3X up to a diagonal phase on the computational basis, 6 CX.
inline void lower_relative_c3x(std::vector<Gate>& out, unsigned c0, unsigned c1, unsigned c2,
                               unsigned t) {
  const double q = kPi / 4.0;
  out.push_back(hadamard(t));
  out.push_back(phase_gate(t, q));
  out.push_back(Gate::cx(c2, t));
  out.push_back(phase_gate(t, -q));
  out.push_back(hadamard(t));
  out.push_back(Gate::cx(c0, t));
  out.push_back(phase_gate(t, q));
  out.push_back(Gate::cx(c1, t));
  out.push_back(phase_gate(t, -q));
  out.push_back(Gate::cx(c0, t));
  out.push_back(phase_gate(t, q));
  out.push_back(Gate::cx(c1, t));
  out.push_back(phase_gate(t, -q));
  out.push_back(hadamard(t));
  out.push_back(phase_gate(t, q));
  out.push_back(Gate::cx(c2, t));
  out.push_back(phase_gate(t, -q));
  out.push_back(hadamard(t));
}

/// Inverse of a U3/CX sequence: reversed order, U3(t,p,l)^-1 = U3(-t,-l,-p).
inline std::vector<Gate> inverse(const std::vector<Gate>& seq) {
  std::vector<Gate> inv;
  inv.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->kind == GateKind::U3)
      inv.push_back(Gate::u3(it->target, -it->theta, -it->lambda, -it->phi));
    else
      inv.push_back(*it);
  }
  return inv;
}

inline void lower(std::vector<Gate>& out, const Gate& g) {
  switch (g.kind) {
    case GateKind::U3:
    case GateKind::CX: out.push_back(g); return;
    case GateKind::X: out.push_back(Gate::u3(g.target, kPi, 0.0, kPi)); return;
    case GateKind::MCPhase:
      switch (g.controls.size()) {
        case 0: out.push_back(phase_gate(g.target, g.phi)); return;
        case 1: lower_cu1(out, g.controls[0], g.target, g.phi); return;
        case 2: lower_ccu1(out, g.controls[0], g.controls[1], g.target, g.phi); return;
        default:
          throw UnsupportedError("controlled phase with " + std::to_string(g.controls.size()) +
                                 " controls is not supported");
      }
    case GateKind::MCX: {
      std::vector<Gate> seq;
      const auto& c = g.controls;
      switch (c.size()) {
        case 0: seq.push_back(Gate::u3(g.target, kPi, 0.0, kPi)); break;
        case 1: seq.push_back(Gate::cx(c[0], g.target)); break;
        case 2: lower_toffoli(seq, c[0], c[1], g.target); break;
        case 3:
          if (!g.relative_phase)
            throw UnsupportedError("exact C3X is not supported; use the relative-phase form");
          lower_relative_c3x(seq, c[0], c[1], c[2], g.target);
          break;
        default:
          throw UnsupportedError("MCX with " + std::to_string(c.size()) +
                                 " controls is not supported");
      }
      if (g.adjoint) seq = inverse(seq);
      out.insert(out.end(), seq.begin(), seq.end());
      return;
    }
  }
}

}  // namespace detail

/// Lowers every gate to U3 and CX.
inline Circuit decompose(const Circuit& c) {
  Circuit out{c.n_work_qubits, c.n_ancillas, {}};
  out.gates.reserve(c.gates.size() * 4);
  for (const auto& g : c.gates) detail::lower(out.gates, g);
  return out;
}

/// Applies the circuit gate by gate. MCX gates in the intermediate form are
/// simulated exactly, whether or not they are marked relative-phase.
inline void simulate(const Circuit& c, Statevector& s) {
  if (s.n_qubits() != c.total_qubits()) throw ParameterError("circuit/state width mismatch");
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::U3: apply_u3(s, g.target, g.theta, g.phi, g.lambda); break;
      case GateKind::X: apply_x(s, g.target); break;
      case GateKind::CX: apply_cx(s, g.controls[0], g.target); break;
      case GateKind::MCPhase: apply_controlled_phase(s, g.controls, g.target, g.phi); break;
      case GateKind::MCX: apply_mcx(s, g.controls, g.target); break;
    }
  }
}

// --- builders ---------------------------------------------------------------

/// Aligned block of 2^free_bits consecutive labels starting at `lo`.
struct LabelCube {
  unsigned lo = 0;
  unsigned free_bits = 0;

  friend bool operator==(const LabelCube&, const LabelCube&) = default;
};

struct MergedBlock {
  LabelCube first;   // label of the edge's first vertex
  LabelCube second;  // label of the edge's second vertex
};

/// Cube rectangles that cover every ordered pair of distinct merged labels
/// (labels k-1 .. 2^L-1) exactly once. Empty when k is a power of two.
inline std::vector<MergedBlock> merged_label_blocks(unsigned k) {
  const unsigned L = bits_for(k);
  const unsigned top = 1u << L;
  std::vector<LabelCube> cubes;
  for (unsigned lo = k - 1; lo < top;) {
    unsigned s = 0;
    while (lo % (2u << s) == 0 && lo + (2u << s) <= top) ++s;
    cubes.push_back({lo, s});
    lo += 1u << s;
  }
  std::vector<MergedBlock> blocks;
  if (cubes.size() == 1 && cubes[0].free_bits == 0) return blocks;
  for (const auto& a : cubes)
    for (const auto& b : cubes)
      if (!(a == b)) blocks.push_back({a, b});
  auto split = [&](auto&& self, LabelCube c) -> void {
    if (c.free_bits == 0) return;
    const LabelCube h0{c.lo, c.free_bits - 1};
    const LabelCube h1{c.lo + (1u << (c.free_bits - 1)), c.free_bits - 1};
    blocks.push_back({h0, h1});
    blocks.push_back({h1, h0});
    self(self, h0);
    self(self, h1);
  };
  for (const auto& c : cubes) split(split, c);
  return blocks;
}

namespace detail {

struct Literal {
  unsigned qubit;
  bool value;
};

/// The fixed (most significant) bits of a cube, as qubit/value pairs for a
/// vertex whose label starts at qubit `first`.
inline std::vector<Literal> cube_literals(const LabelCube& c, unsigned first, unsigned L) {
  std::vector<Literal> lits;
  for (unsigned l = 0; l + c.free_bits < L; ++l)
    lits.push_back({first + l, ((c.lo >> (L - 1 - l)) & 1u) != 0});
  return lits;
}

inline void emit_merged_block(Circuit& c, const MergedBlock& b, unsigned first_i,
                              unsigned first_j, unsigned L, double phi) {
  const unsigned a0 = c.n_work_qubits;
  const unsigned a1 = c.n_work_qubits + 1;
  const auto lit_i = cube_literals(b.first, first_i, L);
  const auto lit_j = cube_literals(b.second, first_j, L);
  auto flip = [&](const std::vector<Literal>& lits) {
    for (const auto& l : lits)
      if (!l.value) c.add(Gate::x(l.qubit));
  };
  auto qubits = [](const std::vector<Literal>& lits) {
    std::vector<unsigned> q;
    for (const auto& l : lits) q.push_back(l.qubit);
    return q;
  };
  const auto ci = qubits(lit_i);
  const auto cj = qubits(lit_j);
  const bool rel_i = ci.size() > 2;
  const bool rel_j = cj.size() > 2;
  flip(lit_i);
  flip(lit_j);
  c.add(Gate::mcx(ci, a0, rel_i));
  c.add(Gate::mcx(cj, a1, rel_j));
  c.add(Gate::mcphase({a0, a1}, cj.back(), phi));
  c.add(Gate::mcx(cj, a1, rel_j, true));
  c.add(Gate::mcx(ci, a0, rel_i, true));
  flip(lit_j);
  flip(lit_i);
}

}  // namespace detail

/// Ancillas needed by the binary phase separator.
inline unsigned binary_ancillas(unsigned k) { return is_power_of_two(k) ? 0 : 2; }

/// exp(-i gamma H_P) for the binary encoding, up to global phase, in the
/// intermediate gate form.
inline Circuit build_binary_phase_circuit(const Graph& g, unsigned k, double gamma) {
  if (k < 2) throw ParameterError("k must be at least 2");
  const unsigned L = bits_for(k);
  if (L > 3) throw UnsupportedError("binary phase circuits are compiled for k <= 8 only");
  Circuit c;
  c.n_work_qubits = static_cast<unsigned>(g.num_vertices()) * L;
  c.n_ancillas = binary_ancillas(k);
  const auto blocks = merged_label_blocks(k);
  for (const auto& e : g.edges()) {
    const double phi = -2.0 * gamma * e.w;
    const unsigned fi = static_cast<unsigned>(e.u) * L;
    const unsigned fj = static_cast<unsigned>(e.v) * L;
    for (unsigned l = 0; l < L; ++l) c.add(Gate::cx(fi + l, fj + l));
    for (unsigned l = 0; l < L; ++l) c.add(Gate::x(fj + l));
    std::vector<unsigned> controls;
    for (unsigned l = 0; l + 1 < L; ++l) controls.push_back(fj + l);
    c.add(Gate::mcphase(controls, fj + L - 1, phi));
    for (unsigned l = 0; l < L; ++l) c.add(Gate::x(fj + l));
    for (unsigned l = L; l-- > 0;) c.add(Gate::cx(fi + l, fj + l));
    for (const auto& b : blocks) detail::emit_merged_block(c, b, fi, fj, L, phi);
  }
  return c;
}

namespace detail {

/// exp(-i (theta/2) Z_a Z_b) up to global phase.
inline void emit_zz(Circuit& c, unsigned qa, unsigned qb, double theta) {
  c.add(Gate::cx(qa, qb));
  c.add(Gate::u3(qb, 0.0, 0.0, theta));
  c.add(Gate::cx(qa, qb));
}

}  // namespace detail

/// One ZZ block per (edge, color) and, with a penalty weight, one per
/// (vertex, color pair).
inline Circuit build_onehot_phase_circuit(const Graph& g, unsigned k, double gamma,
                                          std::optional<double> penalty_beta = std::nullopt) {
  if (k < 2) throw ParameterError("k must be at least 2");
  Circuit c;
  c.n_work_qubits = static_cast<unsigned>(g.num_vertices()) * k;
  for (const auto& e : g.edges()) {
    for (unsigned a = 0; a < k; ++a)
      detail::emit_zz(c, static_cast<unsigned>(e.u) * k + a, static_cast<unsigned>(e.v) * k + a,
                      2.0 * gamma * e.w);
  }
  if (penalty_beta) {
    for (unsigned v = 0; v < g.num_vertices(); ++v)
      for (unsigned a = 0; a < k; ++a)
        for (unsigned b = a + 1; b < k; ++b)
          detail::emit_zz(c, v * k + a, v * k + b, gamma * *penalty_beta);
  }
  return c;
}

/// Parity-partitioned ring of color pairs: (odd pass, even pass), positions
/// zero-based. Together they hold the k ring pairs (a, a+1 mod k).
inline std::pair<std::vector<std::pair<unsigned, unsigned>>,
                 std::vector<std::pair<unsigned, unsigned>>>
xy_partitions(unsigned k) {
  std::vector<std::pair<unsigned, unsigned>> odd, even;
  for (unsigned a = 0; a < k; ++a) {
    const unsigned b = (a + 1) % k;
    if (a % 2 == 0 && a + 1 < k)
      odd.emplace_back(a, b);
    else
      even.emplace_back(a, b);
  }
  return {odd, even};
}

namespace detail {

/// exp(-i beta (XX + YY)) on (qa, qb), up to global phase, 4 CX.
inline void emit_xy(Circuit& c, unsigned qa, unsigned qb, double beta) {
  // XX: Hadamard frame.
  c.add(hadamard(qa));
  c.add(hadamard(qb));
  emit_zz(c, qa, qb, 2.0 * beta);
  c.add(hadamard(qa));
  c.add(hadamard(qb));
  // YY: S^dagger then H maps Y to Z.
  for (auto q : {qa, qb}) {
    c.add(phase_gate(q, -kPi / 2.0));
    c.add(hadamard(q));
  }
  emit_zz(c, qa, qb, 2.0 * beta);
  for (auto q : {qa, qb}) {
    c.add(hadamard(q));
    c.add(phase_gate(q, kPi / 2.0));
  }
}

}  // namespace detail

inline Circuit build_mixer_circuit(const EncodingScheme& scheme, std::size_t num_vertices,
                                   double beta) {
  Circuit c;
  c.n_work_qubits = scheme.work_qubits(num_vertices);
  if (scheme.kind == EncodingKind::OneHotXY) {
    const auto [odd, even] = xy_partitions(scheme.k);
    for (std::size_t v = 0; v < num_vertices; ++v) {
      const unsigned base = static_cast<unsigned>(v) * scheme.k;
      for (const auto& [a, b] : odd) detail::emit_xy(c, base + a, base + b, beta);
      for (const auto& [a, b] : even) detail::emit_xy(c, base + a, base + b, beta);
    }
  } else {
    for (unsigned q = 0; q < c.n_work_qubits; ++q)
      c.add(Gate::u3(q, 2.0 * beta, -detail::kPi / 2.0, detail::kPi / 2.0));
  }
  return c;
}

/// |0..0> -> |W_k> with 2(k-1) CX. The excitation starts on position 0 and
/// each step leaves amplitude 1/sqrt(k) behind while moving the rest on.
inline Circuit build_wk_prep_circuit(unsigned k) {
  if (k < 1) throw ParameterError("W state needs k >= 1");
  Circuit c;
  c.n_work_qubits = k;
  c.add(Gate::x(0));
  for (unsigned j = 0; j + 1 < k; ++j) {
    const double half = std::asin(1.0 / std::sqrt(static_cast<double>(k - j)));
    c.add(Gate::u3(j + 1, half, 0.0, 0.0));
    c.add(Gate::cx(j, j + 1));
    c.add(Gate::u3(j + 1, -half, 0.0, 0.0));
    c.add(Gate::cx(j + 1, j));
  }
  return c;
}

/// Initial-state preparation from |0..0>: Hadamards, or W_k per vertex.
inline Circuit build_initial_state_circuit(const EncodingScheme& scheme,
                                           std::size_t num_vertices) {
  Circuit c;
  c.n_work_qubits = scheme.work_qubits(num_vertices);
  if (scheme.kind == EncodingKind::OneHotXY) {
    const auto w = build_wk_prep_circuit(scheme.k);
    for (std::size_t v = 0; v < num_vertices; ++v) {
      const unsigned base = static_cast<unsigned>(v) * scheme.k;
      for (auto g : w.gates) {
        for (auto& q : g.controls) q += base;
        g.target += base;
        c.add(g);
      }
    }
  } else {
    for (unsigned q = 0; q < c.n_work_qubits; ++q) c.add(detail::hadamard(q));
  }
  return c;
}

/// Phase separator for any scheme, in the intermediate gate form.
inline Circuit build_phase_circuit(const Graph& g, const EncodingScheme& scheme, double gamma) {
  switch (scheme.kind) {
    case EncodingKind::Binary: return build_binary_phase_circuit(g, scheme.k, gamma);
    case EncodingKind::OneHotPenaltyX:
      return build_onehot_phase_circuit(g, scheme.k, gamma, scheme.penalty_beta);
    default: return build_onehot_phase_circuit(g, scheme.k, gamma);
  }
}

// --- verification ------------------------------------------------------------

inline constexpr unsigned kVerifyQubitLimit = 14;

/// Checks that the circuit acts as exp(-i gamma * weight * H) on the work
/// register, ancillas starting and ending in |0>, up to one global phase.
/// Returns the largest deviation of the per-state phase ratio from that of
/// basis state 0. Throws VerificationError when some basis state leaks.
inline double verify_against_diagonal(const Circuit& c, const DiagonalHamiltonian& diag,
                                      double gamma, double weight = 1.0) {
  if (c.n_work_qubits != diag.n_qubits()) throw ParameterError("circuit/diagonal width mismatch");
  if (c.total_qubits() > kVerifyQubitLimit)
    throw CapacityError("verification limited to " + std::to_string(kVerifyQubitLimit) + " qubits");
  const std::size_t dim = diag.size();
  cplx reference{};
  double deviation = 0.0;
  for (std::size_t z = 0; z < dim; ++z) {
    const std::size_t index = z << c.n_ancillas;
    auto s = Statevector::basis(c.total_qubits(), index);
    simulate(c, s);
    const cplx out = s[index];
    const double leak = 1.0 - std::norm(out);
    if (leak > 1e-9) throw VerificationError(z, "circuit is not diagonal or ancillas not restored");
    const cplx ratio = out / std::polar(1.0, -gamma * weight * diag[z]);
    if (z == 0)
      reference = ratio;
    else
      deviation = std::max(deviation, std::abs(ratio - reference));
  }
  return deviation;
}

// --- resources ------------------------------------------------------------

struct ResourceReport {
  unsigned qubits_total = 0;
  std::size_t cx_init = 0;
  std::size_t cx_mixer_per_layer = 0;
  std::size_t cx_phase_per_layer = 0;

  /// Initial state plus one layer, the per-layer figure quoted in result
  /// tables (the one-off preparation amortised into it).
  std::size_t cx_per_layer() const { return cx_init + cx_mixer_per_layer + cx_phase_per_layer; }

  std::size_t cx_total(unsigned p) const {
    return cx_init + p * (cx_mixer_per_layer + cx_phase_per_layer);
  }
};

/// CX counts taken from the compiled circuits. Angles do not affect counts.
inline ResourceReport count_resources(const Graph& g, unsigned k, EncodingKind kind) {
  EncodingScheme scheme{kind, k, 0.0};
  if (kind == EncodingKind::OneHotPenaltyX) scheme.penalty_beta = default_penalty_beta(g, k);
  ResourceReport r;
  const auto phase = decompose(build_phase_circuit(g, scheme, 0.1));
  r.qubits_total = phase.total_qubits();
  r.cx_phase_per_layer = phase.cx_count();
  r.cx_mixer_per_layer = decompose(build_mixer_circuit(scheme, g.num_vertices(), 0.1)).cx_count();
  r.cx_init = decompose(build_initial_state_circuit(scheme, g.num_vertices())).cx_count();
  return r;
}

// --- text emission ----------------------------------------------------------

/// One gate per line: `u3 theta phi lambda q`, `cx c t`; intermediate gates
/// as `x q`, `mcphase phi c.. t`, `mcx c.. t`.
inline void write_circuit(const Circuit& c, std::ostream& os) {
  os << "qubits " << c.n_work_qubits << ' ' << c.n_ancillas << '\n';
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::U3:
        os << "u3 " << detail::format_double(g.theta) << ' ' << detail::format_double(g.phi) << ' '
           << detail::format_double(g.lambda) << ' ' << g.target << '\n';
        break;
      case GateKind::CX: os << "cx " << g.controls[0] << ' ' << g.target << '\n'; break;
      case GateKind::X: os << "x " << g.target << '\n'; break;
      case GateKind::MCPhase:
        os << "mcphase " << detail::format_double(g.phi);
        for (auto q : g.controls) os << ' ' << q;
        os << ' ' << g.target << '\n';
        break;
      case GateKind::MCX:
        os << (g.relative_phase ? (g.adjoint ? "rmcxdg" : "rmcx") : "mcx");
        for (auto q : g.controls) os << ' ' << q;
        os << ' ' << g.target << '\n';
        break;
    }
  }
}

}  // namespace kcut
