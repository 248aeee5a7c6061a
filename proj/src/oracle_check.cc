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

#include "modqec/oracle_check.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "modqec/cyclic_layout.h"
#include "modqec/dense_oracle.h"
#include "modqec/lowering.h"
#include "modqec/tableau.h"

namespace modqec {

OracleComparison compare_with_oracle(const std::vector<PauliOperator> &paulis, int n, int L) {
    auto oracle = dense_sequential_oracle(paulis);
    std::map<int, int> keys;
    NoisyCircuit circuit = lower_to_circuit(cyclic_layout(paulis, n, L).program, NoiseModel{}, &keys);
    auto branches = enumerate_branches(circuit);

    size_t r = paulis.size();
    size_t N = paulis.empty() ? 0 : paulis[0].num_qubits();
    std::map<std::string, std::vector<const TableauBranch *>> by_outcome;
    std::map<std::string, double> dist;
    for (const auto &b : branches) {
        std::string s;
        for (size_t t = 0; t < r; t++) {
            s += b.measurements[keys.at(static_cast<int>(t))] ? '1' : '0';
        }
        by_outcome[s].push_back(&b);
        dist[s] += b.probability;
    }

    OracleComparison out;
    std::set<std::string> all;
    for (const auto &[s, p] : dist) {
        all.insert(s);
    }
    for (const auto &[s, o] : oracle) {
        all.insert(s);
    }
    for (const auto &s : all) {
        double a = dist.count(s) ? dist[s] : 0;
        double b = oracle.count(s) ? oracle.at(s).probability : 0;
        out.tv_distance += std::fabs(a - b) / 2;
    }

    // Tr(rho sigma) = 2^-N sum_P <P>_rho <P>_sigma over all 4^N Paulis.
    for (const auto &[s, outcome] : oracle) {
        out.outcomes++;
        auto it = by_outcome.find(s);
        if (it == by_outcome.end()) {
            out.min_fidelity = 0;
            continue;
        }
        double total = dist[s];
        double fid = 0;
        for (uint64_t code = 0; code < (uint64_t{1} << (2 * N)); code++) {
            PauliOperator P(N);
            PauliOperator full(circuit.num_qubits());
            for (size_t q = 0; q < N; q++) {
                bool x = (code >> (2 * q)) & 1;
                bool z = (code >> (2 * q + 1)) & 1;
                P.xs().set(q, x);
                P.zs().set(q, z);
                full.xs().set(q, x);
                full.zs().set(q, z);
            }
            double e_sigma = 0;
            for (const auto *b : it->second) {
                e_sigma += b->probability / total * b->state.expectation(full);
            }
            fid += pauli_expectation(outcome.state, P) * e_sigma;
        }
        out.min_fidelity = std::min(out.min_fidelity, fid / static_cast<double>(uint64_t{1} << N));
    }
    return out;
}

}  // namespace modqec
