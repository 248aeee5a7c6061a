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

#include "modqec/memory.h"

#include <stdexcept>

namespace modqec {

MemoryExperiment build_memory_experiment(const BBCode &code, Layout layout, Basis basis, int T,
                                         const NoiseModel &noise, const MemoryOptions &opts) {
    if (T < 1) {
        throw std::invalid_argument("memory experiment needs at least one round");
    }
    noise.validate();
    MemoryExperiment ex;
    ex.T = T;
    ex.basis = basis;
    ex.program = syndrome_rounds(code, layout, T, opts.layout);
    if (opts.parallelism == Parallelism::chain) {
        ex.program = serialize_chain_sequential(ex.program);
    }
    validate_program(ex.program);

    NoisyCircuit c(ex.program.num_qubits);
    std::vector<int> data(code.n);
    for (int q = 0; q < code.n; q++) {
        data[q] = q;
    }
    c.append(basis == Basis::Z ? CircuitGate::R : CircuitGate::RX, data);
    c.append(CircuitGate::DEPOLARIZE1, data, noise.one_qubit_rate());
    c.append(CircuitGate::TICK, {});
    lower_into(c, ex.program, noise, &ex.keys);
    int first_data = c.append(basis == Basis::Z ? CircuitGate::M : CircuitGate::MX, data, noise.one_qubit_rate());

    int half = code.half();
    auto meas = [&](int round, Basis type, int c_index) {
        int key = round * 2 * half + (type == Basis::Z ? half : 0) + c_index;
        auto it = ex.keys.find(key);
        if (it == ex.keys.end()) {
            throw std::logic_error("layout never measured check key " + std::to_string(key));
        }
        return it->second;
    };
    Basis other = basis == Basis::Z ? Basis::X : Basis::Z;
    for (int ci = 0; ci < half; ci++) {
        c.add_detector({meas(0, basis, ci)});
    }
    for (int r = 1; r < T; r++) {
        for (int ci = 0; ci < half; ci++) {
            c.add_detector({meas(r, basis, ci), meas(r - 1, basis, ci)});
        }
        if (opts.both_check_types) {
            for (int ci = 0; ci < half; ci++) {
                c.add_detector({meas(r, other, ci), meas(r - 1, other, ci)});
            }
        }
    }
    const GF2Matrix &h = basis == Basis::Z ? code.hz : code.hx;
    for (int ci = 0; ci < half; ci++) {
        std::vector<int> d{meas(T - 1, basis, ci)};
        for (size_t q : h.row(ci).ones()) {
            d.push_back(first_data + static_cast<int>(q));
        }
        c.add_detector(std::move(d));
    }
    for (const auto &logical : logical_observables(code, basis)) {
        std::vector<int> obs;
        for (size_t q : logical.support()) {
            obs.push_back(first_data + static_cast<int>(q));
        }
        c.add_observable(std::move(obs));
    }
    ex.circuit = std::move(c);
    return ex;
}

}  // namespace modqec
