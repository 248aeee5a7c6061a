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

#ifndef MODQEC_SENSITIVITY_H
#define MODQEC_SENSITIVITY_H

#include <functional>
#include <vector>

#include "modqec/circuit.h"
#include "modqec/gf2.h"
#include "modqec/pauli.h"

namespace modqec {

/// An item is a parity of measurement outcomes (a detector, an observable, or one record).
/// Walking the circuit backwards tracks, for every qubit, which items' Heisenberg-picture
/// operators carry an X or a Z component on it at the current time.
struct SensitivityOptions {
    /// Treat the implicit |0> start as a final reset.
    bool include_initial_state = true;
};

struct SensitivityResult {
    /// Items whose value is random in the noiseless circuit.
    BitVec nondeterministic;
    /// Operator of each item at the start of the circuit, before the implicit |0> state.
    std::vector<PauliOperator> start_operators;
};

/// Called once per elementary Pauli fault (and per measurement flip) with its
/// probability and the set of items it flips. Empty signatures are reported too.
using FaultVisitor = std::function<void(double p, const BitVec &flipped)>;

SensitivityResult propagate_items(const NoisyCircuit &circuit, const std::vector<std::vector<int>> &items,
                                  const FaultVisitor &visit = {}, const SensitivityOptions &opts = {});

/// Detectors followed by observables, as one item list.
std::vector<std::vector<int>> detector_and_observable_items(const NoisyCircuit &circuit);

}  // namespace modqec

#endif
