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

#ifndef MODQEC_LOWERING_H
#define MODQEC_LOWERING_H

#include <map>

#include "modqec/circuit.h"
#include "modqec/machine.h"

namespace modqec {

struct NoiseModel {
    double p = 0;
    int tau_m = 30;
    int tau_s = 30;

    double two_qubit_rate() const;
    double one_qubit_rate() const;
    double idle_rate() const;
    /// Depolarizing rate applied to every qubit after a shift.
    double shift_rate() const;
    /// tau_m idle steps composed into one depolarizing channel.
    double measurement_idle_rate() const;
    void validate() const;
};

/// Appends the lowered layers of `program` to `circuit`. When `keys` is given, every keyed
/// measurement records key -> measurement index.
void lower_into(NoisyCircuit &circuit, const MachineProgram &program, const NoiseModel &noise,
                std::map<int, int> *keys = nullptr);

/// Validates the program first; chain programs must already be serialized.
NoisyCircuit lower_to_circuit(const MachineProgram &program, const NoiseModel &noise,
                              std::map<int, int> *keys = nullptr);

}  // namespace modqec

#endif
