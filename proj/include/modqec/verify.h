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

#ifndef MODQEC_VERIFY_H
#define MODQEC_VERIFY_H

#include <string>
#include <vector>

#include "modqec/circuit.h"
#include "modqec/codes.h"
#include "modqec/layouts.h"

namespace modqec {

struct VerifyReport {
    int random_detectors = 0;
    int random_observables = 0;
    /// Detectors or observables that are deterministic but evaluate to 1.
    int nonzero_reference = 0;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

/// Checks that every detector and observable of the noiseless circuit is deterministic and
/// evaluates to 0.
VerifyReport verify_noiseless(const NoisyCircuit &circuit);

struct GroupReport {
    int measured = 0;
    int mismatched = 0;
    bool group_equal = false;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

/// Pulls every keyed measurement of a one-round program back to the start and compares it
/// with generator `key` of the code. Data qubits must be circuit qubits 0..N-1 and every
/// other qubit must be prepared inside the program.
GroupReport check_measured_group(const MachineProgram &one_round, const StabilizerCode &code);

/// check_measured_group for one round of a BB layout.
GroupReport check_layout_group(const BBCode &code, Layout layout, const LayoutOptions &opts = {});

}  // namespace modqec

#endif
