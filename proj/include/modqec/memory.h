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

#ifndef MODQEC_MEMORY_H
#define MODQEC_MEMORY_H

#include <map>

#include "modqec/circuit.h"
#include "modqec/codes.h"
#include "modqec/layouts.h"
#include "modqec/lowering.h"

namespace modqec {

struct MemoryOptions {
    /// Also compare consecutive rounds of the other check type.
    bool both_check_types = true;
    /// Serialize two-qubit gates inside each module (long-chain mode).
    Parallelism parallelism = Parallelism::full;
    LayoutOptions layout;
};

struct MemoryExperiment {
    NoisyCircuit circuit;
    MachineProgram program;
    /// Check key -> measurement index.
    std::map<int, int> keys;
    int T = 0;
    Basis basis = Basis::Z;
};

/// Data prepared in the basis eigenstate, T syndrome rounds, transversal data readout.
MemoryExperiment build_memory_experiment(const BBCode &code, Layout layout, Basis basis, int T,
                                         const NoiseModel &noise, const MemoryOptions &opts = {});

}  // namespace modqec

#endif
