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

#ifndef MODQEC_DENSE_ORACLE_H
#define MODQEC_DENSE_ORACLE_H

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "modqec/pauli.h"

namespace modqec {

using StateVector = std::vector<std::complex<double>>;

struct OracleOutcome {
    double probability = 0;
    /// Normalized post-measurement state of the N data qubits; qubit q is bit q of the index.
    StateVector state;
};

/// Measures P_0, P_1, ... one at a time on |0...0> through an ancilla gadget and returns the
/// joint outcome distribution keyed by strings of '0' (+1) and '1' (-1). Requires N <= 6
/// and at most 6 operators.
std::map<std::string, OracleOutcome> dense_sequential_oracle(const std::vector<PauliOperator> &paulis);

/// <psi| P |psi> for a Hermitian Pauli.
double pauli_expectation(const StateVector &psi, const PauliOperator &p);

}  // namespace modqec

#endif
