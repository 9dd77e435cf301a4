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


// Runs QAOA on the two-vertex barbell for every encoding and k = 2..5 and
// prints the depth-1 approximation ratios.

#include <cstdio>

#include "kcut/kcut.hpp"

int main() {
  using namespace kcut;
  const Graph g = barbell();
  std::printf("%-16s", "scheme");
  for (unsigned k = 2; k <= 5; ++k) std::printf("    k=%u", k);
  std::printf("\n");
  for (auto kind : {EncodingKind::Binary, EncodingKind::OneHotX, EncodingKind::OneHotXY}) {
    std::printf("%-16s", to_string(kind).c_str());
    for (unsigned k = 2; k <= 5; ++k) {
      const QaoaProblem problem(g, make_scheme(kind, k, g));
      RunConfig cfg;
      cfg.p_max = 1;
      const auto run = run_qaoa(problem, cfg);
      std::printf("  %.3f", run.depths[0].ratio);
    }
    std::printf("\n");
  }
}
