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

#ifndef MODQEC_ORACLE_CHECK_H
#define MODQEC_ORACLE_CHECK_H

#include <vector>

#include "modqec/pauli.h"

namespace modqec {

struct OracleComparison {
    /// Total variation distance between the two joint outcome distributions.
    double tv_distance = 0;
    /// Smallest post-measurement state fidelity over the oracle's outcomes.
    double min_fidelity = 1;
    int outcomes = 0;
};

/// Runs the noiseless cyclic-layout circuit for `paulis` on a 2 x L array of n-qubit modules
/// through every outcome branch and compares it with the dense sequential oracle.
OracleComparison compare_with_oracle(const std::vector<PauliOperator> &paulis, int n, int L);

}  // namespace modqec

#endif
