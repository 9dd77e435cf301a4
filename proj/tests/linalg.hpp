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


// Small dense linear algebra used as an independent oracle in tests.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace kcut::testing {

using cplx = std::complex<double>;

struct Mat {
  std::size_t n = 0;
  std::vector<cplx> a;

  explicit Mat(std::size_t dim) : n(dim), a(dim * dim) {}
  cplx& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  static Mat identity(std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Mat operator*(const Mat& x, const Mat& y) {
  Mat out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k)
      for (std::size_t j = 0; j < x.n; ++j) out(i, j) += x(i, k) * y(k, j);
  return out;
}

inline Mat operator+(Mat x, const Mat& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
  return x;
}

inline Mat scale(Mat x, cplx s) {
  for (auto& v : x.a) v *= s;
  return x;
}

inline Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.n * y.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      for (std::size_t k = 0; k < y.n; ++k)
        for (std::size_t l = 0; l < y.n; ++l) out(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
  return out;
}

inline Mat pauli_x() {
  Mat m(2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

inline Mat pauli_y() {
  Mat m(2);
  m(0, 1) = cplx{0.0, -1.0};
  m(1, 0) = cplx{0.0, 1.0};
  return m;
}

/// exp(m) by scaling and squaring with a 30-term Taylor series.
inline Mat expm(const Mat& m) {
  double norm = 0.0;
  for (const auto& v : m.a) norm = std::max(norm, std::abs(v));
  int squarings = 0;
  while (norm * static_cast<double>(m.n) > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const Mat x = scale(m, std::pow(0.5, squarings));
  Mat term = Mat::identity(m.n);
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = scale(term * x, 1.0 / k);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

inline std::vector<cplx> apply(const Mat& m, const std::vector<cplx>& v) {
  std::vector<cplx> out(m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace kcut::testing
