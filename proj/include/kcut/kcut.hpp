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


// Umbrella header.

#pragma once

#include "kcut/circuit.hpp"
#include "kcut/cut.hpp"
#include "kcut/error.hpp"
#include "kcut/graph.hpp"
#include "kcut/hamiltonian.hpp"
#include "kcut/optimize.hpp"
#include "kcut/qaoa.hpp"
#include "kcut/random.hpp"
#include "kcut/report.hpp"
#include "kcut/statevector.hpp"
