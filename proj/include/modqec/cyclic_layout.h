// Copyright 2026 The modqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MODQEC_CYCLIC_LAYOUT_H
#define MODQEC_CYCLIC_LAYOUT_H

#include <utility>
#include <vector>

#include "modqec/machine.h"
#include "modqec/pauli.h"

namespace modqec {

struct CyclicLayoutResult {
    MachineProgram program;
    int iterations = 0;
};

/// 3 + (ceil(r/n) + L - 1)(n + 1).
int cyclic_depth_bound(int r, int n, int L);

/// Measures P_0..P_{r-1} on a 2 x L array of n-qubit modules. Data qubit q sits at
/// placement[q] = (cell, slot) of the fixed row, by default (q / n, q % n); cell L-1 must
/// stay empty. Ancilla (module h, slot s) is circuit qubit N + h*n + s and operator t is
/// measured with key t.
CyclicLayoutResult cyclic_layout(const std::vector<PauliOperator> &paulis, int n, int L,
                                 const std::vector<std::pair<int, int>> &placement = {});

}  // namespace modqec

#endif
