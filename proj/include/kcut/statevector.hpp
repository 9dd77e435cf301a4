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
 * Dense statevector simulator.
 *
 * Angle conventions:
 *  - U3(theta, phi, lambda) = [[cos(t/2), -e^{i l} sin(t/2)],
 *                              [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]]
 *  - controlled phase with angle phi multiplies by e^{i phi} where every
 *    control and the target read 1, i.e. C..C-U3(0, phi, 0);
 *  - apply_rx(beta) is exp(-i beta X): the full angle sits in the exponent;
 *  - apply_xy_pair(beta) is exp(-i beta (XX + YY));
 *  - apply_diagonal_phase(gamma) is exp(-i gamma H).
 *
 * Qubit q is bit (n - 1 - q) of the basis index.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "kcut/error.hpp"
#include "kcut/hamiltonian.hpp"
#include "kcut/random.hpp"

namespace kcut {

using cplx = std::complex<double>;

class Statevector {
 public:
  Statevector() = default;

  /// |0...0> on n qubits.
  explicit Statevector(unsigned n_qubits, unsigned budget = kDefaultQubitBudget)
      : n_qubits_(n_qubits) {
    check_budget(n_qubits, budget);
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
  }

  /// Takes ownership of raw amplitudes; the caller is responsible for the norm.
  Statevector(unsigned n_qubits, std::vector<cplx> amplitudes)
      : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n_qubits))
      throw ParameterError("amplitude vector length must be 2^n");
  }

  static Statevector basis(unsigned n_qubits, std::uint64_t z) {
    Statevector s(n_qubits);
    if (z >= s.size()) throw ParameterError("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[z] = 1.0;
    return s;
  }

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<cplx> amplitudes() noexcept { return amps_; }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  cplx operator[](std::size_t z) const { return amps_[z]; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

  std::vector<double> probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t z = 0; z < p.size(); ++z) p[z] = std::norm(amps_[z]);
    return p;
  }

  /// Bit position of qubit q inside a basis index.
  std::size_t bit_of(unsigned q) const {
    if (q >= n_qubits_) throw ParameterError("qubit " + std::to_string(q) + " out of range");
    return n_qubits_ - 1 - q;
  }

 private:
  unsigned n_qubits_ = 0;
  std::vector<cplx> amps_;
};

/// Kronecker product; a's qubits come first (most significant).
inline Statevector tensor(const Statevector& a, const Statevector& b,
                          unsigned budget = kDefaultQubitBudget) {
  check_budget(a.n_qubits() + b.n_qubits(), budget);
  std::vector<cplx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return Statevector(a.n_qubits() + b.n_qubits(), std::move(out));
}

inline Statevector prepare_plus(unsigned n_qubits, unsigned budget = kDefaultQubitBudget) {
  check_budget(n_qubits, budget);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return Statevector(n_qubits, std::vector<cplx>(dim, cplx{amp, 0.0}));
}

/// Equal superposition of the k Hamming-weight-1 states of k qubits.
inline Statevector prepare_wk(unsigned k) {
  if (k < 1) throw ParameterError("W state needs k >= 1");
  std::vector<cplx> amps(std::size_t{1} << k, cplx{0.0, 0.0});
  const double amp = 1.0 / std::sqrt(static_cast<double>(k));
  for (unsigned a = 0; a < k; ++a) amps[std::size_t{1} << a] = amp;
  return Statevector(k, std::move(amps));
}

/// |W_k> on each of num_vertices consecutive k-qubit groups.
inline Statevector prepare_wk_product(unsigned k, std::size_t num_vertices,
                                      unsigned budget = kDefaultQubitBudget) {
  check_budget(static_cast<unsigned>(num_vertices) * k, budget);
  const auto w = prepare_wk(k);
  Statevector s = w;
  for (std::size_t v = 1; v < num_vertices; ++v) s = tensor(s, w, budget);
  return s;
}

namespace detail {

inline void check_distinct(const Statevector& s, std::span<const unsigned> qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    s.bit_of(qubits[i]);
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j])
        throw ParameterError("qubit " + std::to_string(qubits[i]) + " used twice");
  }
}

/// a * b without the library's NaN recovery path, which keeps loops
/// vectorisable.
inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to qubit q.
inline void apply_1q(Statevector& s, unsigned q, cplx m00, cplx m01, cplx m10, cplx m11) {
  const std::size_t stride = std::size_t{1} << s.bit_of(q);
  auto amps = s.amplitudes();
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a0 = amps[i];
      const cplx a1 = amps[i + stride];
      amps[i] = mul(m00, a0) + mul(m01, a1);
      amps[i + stride] = mul(m10, a0) + mul(m11, a1);
    }
  }
}

}  // namespace detail

inline void apply_u3(Statevector& s, unsigned q, double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0), sn = std::sin(theta / 2.0);
  detail::apply_1q(s, q, c, -std::polar(sn, lambda), std::polar(sn, phi),
                   std::polar(c, phi + lambda));
}

inline void apply_x(Statevector& s, unsigned q) {
  const std::size_t stride = std::size_t{1} << s.bit_of(q);
  auto amps = s.amplitudes();
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride)
    for (std::size_t i = base; i < base + stride; ++i) std::swap(amps[i], amps[i + stride]);
}

inline void apply_cx(Statevector& s, unsigned control, unsigned target) {
  const unsigned q[2] = {control, target};
  detail::check_distinct(s, q);
  const std::size_t cmask = std::size_t{1} << s.bit_of(control);
  const std::size_t tmask = std::size_t{1} << s.bit_of(target);
  auto amps = s.amplitudes();
  for (std::size_t z = 0; z < amps.size(); ++z) {
    if ((z & cmask) && !(z & tmask)) std::swap(amps[z], amps[z | tmask]);
  }
}

/// Multiplies by e^{i phi} every amplitude whose controls and target are 1.
inline void apply_controlled_phase(Statevector& s, std::span<const unsigned> controls,
                                   unsigned target, double phi) {
  std::vector<unsigned> all(controls.begin(), controls.end());
  all.push_back(target);
  detail::check_distinct(s, all);
  std::size_t mask = 0;
  for (auto q : all) mask |= std::size_t{1} << s.bit_of(q);
  const cplx factor = std::polar(1.0, phi);
  auto amps = s.amplitudes();
  for (std::size_t z = 0; z < amps.size(); ++z)
    if ((z & mask) == mask) amps[z] *= factor;
}

/// Multi-controlled X; with no controls this is a plain X.
inline void apply_mcx(Statevector& s, std::span<const unsigned> controls, unsigned target) {
  std::vector<unsigned> all(controls.begin(), controls.end());
  all.push_back(target);
  detail::check_distinct(s, all);
  std::size_t cmask = 0;
  for (auto q : controls) cmask |= std::size_t{1} << s.bit_of(q);
  const std::size_t tmask = std::size_t{1} << s.bit_of(target);
  auto amps = s.amplitudes();
  for (std::size_t z = 0; z < amps.size(); ++z) {
    if ((z & cmask) == cmask && !(z & tmask)) std::swap(amps[z], amps[z | tmask]);
  }
}

/// exp(-i gamma H) for diagonal H.
inline void apply_diagonal_phase(Statevector& s, const DiagonalHamiltonian& diag, double gamma) {
  if (diag.n_qubits() != s.n_qubits()) throw ParameterError("diagonal/state size mismatch");
  auto amps = s.amplitudes();
  if (diag.compressed()) {
    std::vector<cplx> factors(diag.levels().size());
    for (std::size_t l = 0; l < factors.size(); ++l)
      factors[l] = std::polar(1.0, -gamma * diag.levels()[l]);
    const auto& index = diag.level_index();
    for (std::size_t z = 0; z < amps.size(); ++z) amps[z] = detail::mul(amps[z], factors[index[z]]);
  } else {
    for (std::size_t z = 0; z < amps.size(); ++z) amps[z] *= std::polar(1.0, -gamma * diag[z]);
  }
}

/// exp(-i beta X) on one qubit.
inline void apply_rx(Statevector& s, unsigned q, double beta) {
  const double c = std::cos(beta), sn = std::sin(beta);
  const std::size_t stride = std::size_t{1} << s.bit_of(q);
  auto amps = s.amplitudes();
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a0 = amps[i];
      const cplx a1 = amps[i + stride];
      // c a0 - i s a1, c a1 - i s a0
      amps[i] = {c * a0.real() + sn * a1.imag(), c * a0.imag() - sn * a1.real()};
      amps[i + stride] = {c * a1.real() + sn * a0.imag(), c * a1.imag() - sn * a0.real()};
    }
  }
}

/// exp(-i beta (X_a X_b + Y_a Y_b)): rotates |01> <-> |10> by 2 beta and
/// leaves |00>, |11> untouched.
inline void apply_xy_pair(Statevector& s, unsigned qa, unsigned qb, double beta) {
  const unsigned q[2] = {qa, qb};
  detail::check_distinct(s, q);
  const std::size_t ma = std::size_t{1} << s.bit_of(qa);
  const std::size_t mb = std::size_t{1} << s.bit_of(qb);
  const cplx c{std::cos(2.0 * beta), 0.0};
  const cplx ms{0.0, -std::sin(2.0 * beta)};
  auto amps = s.amplitudes();
  for (std::size_t z = 0; z < amps.size(); ++z) {
    if ((z & ma) && !(z & mb)) {
      const std::size_t w = (z ^ ma) | mb;
      const cplx a10 = amps[z];
      const cplx a01 = amps[w];
      amps[z] = detail::mul(c, a10) + detail::mul(ms, a01);
      amps[w] = detail::mul(ms, a10) + detail::mul(c, a01);
    }
  }
}

/// sum_z |psi_z|^2 values[z]
inline double expectation(const Statevector& s, std::span<const double> values) {
  if (values.size() != s.size()) throw ParameterError("diagonal/state size mismatch");
  double sum = 0.0;
  for (std::size_t z = 0; z < values.size(); ++z) sum += std::norm(s[z]) * values[z];
  return sum;
}

inline double expectation(const Statevector& s, const DiagonalHamiltonian& diag) {
  return expectation(s, std::span<const double>(diag.values()));
}

struct SampleSet {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  /// Mean of values[z] over the drawn outcomes.
  double mean(std::span<const double> values) const {
    double sum = 0.0;
    for (const auto& [z, c] : counts) sum += values[z] * static_cast<double>(c);
    return shots ? sum / static_cast<double>(shots) : 0.0;
  }
};

/// Multinomial draw of `shots` outcomes from |psi_z|^2. The uniforms are
/// sorted and swept against the cumulative distribution in one pass.
inline SampleSet sample(const Statevector& s, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw ParameterError("shots must be at least 1");
  Rng rng(seed);
  const double total = s.norm_squared();
  std::vector<double> u(shots);
  for (auto& x : u) x = rng.uniform() * total;
  std::sort(u.begin(), u.end());
  SampleSet out;
  out.shots = shots;
  out.seed = seed;
  double cumulative = 0.0;
  std::size_t next = 0;
  std::size_t last_nonzero = 0;
  for (std::size_t z = 0; z < s.size() && next < shots; ++z) {
    const double p = std::norm(s[z]);
    if (p == 0.0) continue;
    last_nonzero = z;
    cumulative += p;
    std::uint64_t hits = 0;
    while (next < shots && u[next] < cumulative) {
      ++hits;
      ++next;
    }
    if (hits) out.counts[z] += hits;
  }
  // Round-off can leave the largest draws just past the final cumulative sum.
  if (next < shots) out.counts[last_nonzero] += shots - next;
  return out;
}

}  // namespace kcut
