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

#ifndef MODQEC_TESTS_FAULT_INJECTION_H
#define MODQEC_TESTS_FAULT_INJECTION_H

#include <map>
#include <vector>

#include "modqec/circuit.h"
#include "modqec/dem.h"
#include "modqec/tableau.h"

namespace modqec::fault {

/// One elementary fault: a Pauli inserted after op `op`, or a flipped record of
/// measurement target `target` of op `op`.
struct Fault {
    size_t op = 0;
    std::vector<std::pair<int, char>> paulis;
    int flip_target = -1;
};

inline void apply_pauli(Tableau &t, int q, char p) {
    if (p == 'X' || p == 'Y') {
        t.x(q);
    }
    if (p == 'Z' || p == 'Y') {
        t.s(q);
        t.s(q);
    }
}

/// Runs the noiseless circuit with one fault on a tableau; random outcomes are taken as 0.
inline std::vector<uint8_t> run_with_fault(const NoisyCircuit &c, const Fault *fault) {
    Tableau t(c.num_qubits());
    std::vector<uint8_t> rec;
    for (size_t k = 0; k < c.ops().size(); k++) {
        const auto &op = c.ops()[k];
        const auto &q = op.targets;
        switch (op.gate) {
            case CircuitGate::R:
                for (int a : q) t.reset_z(a);
                break;
            case CircuitGate::RX:
                for (int a : q) t.reset_x(a);
                break;
            case CircuitGate::H:
                for (int a : q) t.h(a);
                break;
            case CircuitGate::CX:
                for (size_t i = 0; i < q.size(); i += 2) t.cx(q[i], q[i + 1]);
                break;
            case CircuitGate::CY:
                for (size_t i = 0; i < q.size(); i += 2) t.cy(q[i], q[i + 1]);
                break;
            case CircuitGate::CZ:
                for (size_t i = 0; i < q.size(); i += 2) t.cz(q[i], q[i + 1]);
                break;
            case CircuitGate::M:
            case CircuitGate::MR:
            case CircuitGate::MX:
            case CircuitGate::MRX:
                for (size_t i = 0; i < q.size(); i++) {
                    bool x = op.gate == CircuitGate::MX || op.gate == CircuitGate::MRX;
                    bool bit = x ? t.measure_x(q[i]) : t.measure_z(q[i]);
                    if (fault != nullptr && fault->op == k && fault->flip_target == static_cast<int>(i)) {
                        bit = !bit;
                    }
                    rec.push_back(bit);
                    if (op.gate == CircuitGate::MR) t.reset_z(q[i]);
                    if (op.gate == CircuitGate::MRX) t.reset_x(q[i]);
                }
                break;
            default:
                break;
        }
        if (fault != nullptr && fault->op == k) {
            for (auto [a, p] : fault->paulis) {
                apply_pauli(t, a, p);
            }
        }
    }
    return rec;
}

inline std::vector<int> parities(const NoisyCircuit &c, const std::vector<uint8_t> &rec) {
    std::vector<int> out;
    for (const auto *list : {&c.detectors(), &c.observables()}) {
        for (const auto &item : *list) {
            int v = 0;
            for (int m : item) v ^= rec[m];
            out.push_back(v);
        }
    }
    return out;
}

/// Detector error model built by injecting every elementary fault into a tableau run.
inline DetectorErrorModel injected_dem(const NoisyCircuit &c) {
    const char letters[] = "IXYZ";
    int nd = static_cast<int>(c.detectors().size());
    std::vector<int> base = parities(c, run_with_fault(c, nullptr));
    std::vector<ErrorMechanism> raw;
    auto record = [&](const Fault &f, double p) {
        std::vector<int> now = parities(c, run_with_fault(c, &f));
        ErrorMechanism m;
        m.p = p;
        for (size_t k = 0; k < now.size(); k++) {
            if (now[k] != base[k]) {
                (static_cast<int>(k) < nd ? m.detectors : m.observables)
                    .push_back(static_cast<int>(k) - (static_cast<int>(k) < nd ? 0 : nd));
            }
        }
        raw.push_back(m);
    };
    for (size_t k = 0; k < c.ops().size(); k++) {
        const auto &op = c.ops()[k];
        const auto &q = op.targets;
        switch (op.gate) {
            case CircuitGate::X_ERROR:
            case CircuitGate::Z_ERROR:
                for (int a : q) record(Fault{k, {{a, op.gate == CircuitGate::X_ERROR ? 'X' : 'Z'}}, -1}, op.arg);
                break;
            case CircuitGate::DEPOLARIZE1:
                for (int a : q)
                    for (int e = 1; e < 4; e++) record(Fault{k, {{a, letters[e]}}, -1}, op.arg / 3);
                break;
            case CircuitGate::DEPOLARIZE2:
                for (size_t i = 0; i < q.size(); i += 2)
                    for (int e = 1; e < 16; e++)
                        record(Fault{k, {{q[i], letters[e & 3]}, {q[i + 1], letters[e >> 2]}}, -1}, op.arg / 15);
                break;
            case CircuitGate::M:
            case CircuitGate::MR:
            case CircuitGate::MX:
            case CircuitGate::MRX:
                if (op.arg > 0)
                    for (size_t i = 0; i < q.size(); i++) record(Fault{k, {}, static_cast<int>(i)}, op.arg);
                break;
            default:
                break;
        }
    }
    return make_dem(nd, static_cast<int>(c.observables().size()), raw);
}

}  // namespace modqec::fault

#endif
