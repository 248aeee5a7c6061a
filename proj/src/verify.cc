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

#include "modqec/verify.h"

#include <map>

#include "modqec/lowering.h"
#include "modqec/sensitivity.h"
#include "modqec/tableau.h"

namespace modqec {

VerifyReport verify_noiseless(const NoisyCircuit &circuit) {
    VerifyReport rep;
    NoisyCircuit clean = circuit.without_noise();
    auto items = detector_and_observable_items(clean);
    int nd = static_cast<int>(clean.detectors().size());
    SensitivityResult sens = propagate_items(clean, items);
    for (size_t k : sens.nondeterministic.ones()) {
        if (static_cast<int>(k) < nd) {
            rep.random_detectors++;
        } else {
            rep.random_observables++;
        }
    }
    if (rep.random_detectors > 0) {
        rep.problems.push_back(std::to_string(rep.random_detectors) + " random detectors");
    }
    if (rep.random_observables > 0) {
        rep.problems.push_back(std::to_string(rep.random_observables) + " random observables");
    }
    TableauRun run = tableau_run(clean);
    for (size_t k = 0; k < items.size(); k++) {
        if (sens.nondeterministic.get(k)) {
            continue;
        }
        bool parity = false;
        for (int m : items[k]) {
            parity ^= run.measurements[m] != 0;
        }
        if (parity) {
            rep.nonzero_reference++;
        }
    }
    if (rep.nonzero_reference > 0) {
        rep.problems.push_back(std::to_string(rep.nonzero_reference) + " parities evaluate to 1 without noise");
    }
    return rep;
}

GroupReport check_measured_group(const MachineProgram &one_round, const StabilizerCode &code) {
    GroupReport rep;
    std::map<int, int> keys;
    NoisyCircuit circuit = lower_to_circuit(one_round, NoiseModel{}, &keys);
    size_t nq = code.num_qubits();
    const auto &gens = code.generators();
    std::vector<std::vector<int>> items;
    std::vector<int> item_key;
    for (const auto &[key, m] : keys) {
        items.push_back({m});
        item_key.push_back(key);
    }
    SensitivityOptions opts;
    opts.include_initial_state = false;
    SensitivityResult sens = propagate_items(circuit, items, {}, opts);
    rep.measured = static_cast<int>(items.size());
    std::vector<bool> seen(gens.size(), false);
    for (size_t k = 0; k < items.size(); k++) {
        int key = item_key[k];
        const PauliOperator &op = sens.start_operators[k];
        if (sens.nondeterministic.get(k)) {
            rep.problems.push_back("measurement with key " + std::to_string(key) + " is randomized by a reset");
        }
        PauliOperator data(nq);
        bool ancilla_x = false;
        for (size_t q = 0; q < op.num_qubits(); q++) {
            if (q < nq) {
                data.xs().set(q, op.xs().get(q));
                data.zs().set(q, op.zs().get(q));
            } else if (op.xs().get(q)) {
                ancilla_x = true;
            }
        }
        if (ancilla_x) {
            rep.problems.push_back("measurement with key " + std::to_string(key) + " depends on an unprepared qubit");
        }
        if (key < 0 || key >= static_cast<int>(gens.size())) {
            rep.problems.push_back("unexpected key " + std::to_string(key));
            continue;
        }
        seen[key] = true;
        if (!(data == gens[key])) {
            rep.mismatched++;
            if (rep.mismatched <= 3) {
                rep.problems.push_back("key " + std::to_string(key) + " measures " + data.str() + " instead of " +
                                       gens[key].str());
            }
        }
    }
    for (size_t g = 0; g < gens.size(); g++) {
        if (!seen[g]) {
            rep.problems.push_back("generator " + std::to_string(g) + " is never measured");
        }
    }
    rep.group_equal = rep.problems.empty();
    return rep;
}

GroupReport check_layout_group(const BBCode &code, Layout layout, const LayoutOptions &opts) {
    return check_measured_group(syndrome_rounds(code, layout, 1, opts), stabilizer_generators(code));
}

}  // namespace modqec
