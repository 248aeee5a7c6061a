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

#include "modqec/lowering.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modqec {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

CircuitGate two_qubit_gate(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
            return CircuitGate::CX;
        case GateKind::CY:
            return CircuitGate::CY;
        case GateKind::CZ:
            return CircuitGate::CZ;
        default:
            throw std::invalid_argument("not a two-qubit gate: " + gate_name(kind));
    }
}

bool is_moving_shift(const Instruction &inst, const ArrayConfig &config) {
    if (inst.op == OpKind::shift) {
        return ((inst.amount % config.L) + config.L) % config.L != 0;
    }
    if (inst.op == OpKind::intra_shift) {
        return ((inst.amount % config.module_size) + config.module_size) % config.module_size != 0;
    }
    return false;
}

}  // namespace

double NoiseModel::two_qubit_rate() const { return clamp01(p); }
double NoiseModel::one_qubit_rate() const { return clamp01(p / 10); }
double NoiseModel::idle_rate() const { return clamp01(p / 100); }
double NoiseModel::shift_rate() const { return clamp01(tau_s * p / 100); }

double NoiseModel::measurement_idle_rate() const {
    double q = idle_rate();
    return clamp01(0.75 * (1 - std::pow(1 - 4 * q / 3, tau_m)));
}

void NoiseModel::validate() const {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("noise rate p must lie in [0, 1]");
    }
    if (tau_m < 0 || tau_s < 0) {
        throw std::invalid_argument("tau_m and tau_s must be non-negative");
    }
}

void lower_into(NoisyCircuit &circuit, const MachineProgram &program, const NoiseModel &noise,
                std::map<int, int> *keys) {
    noise.validate();
    if (circuit.num_qubits() < program.num_qubits) {
        throw std::invalid_argument("circuit has fewer qubits than the program");
    }
    int nq = program.num_qubits;
    std::vector<int> all(nq);
    for (int q = 0; q < nq; q++) {
        all[q] = q;
    }
    for (const auto &layer : program.layers) {
        bool shift_layer = false;
        bool moved = false;
        for (const auto &inst : layer) {
            if (inst.op == OpKind::shift || inst.op == OpKind::intra_shift) {
                shift_layer = true;
                moved |= is_moving_shift(inst, program.config);
            }
        }
        if (shift_layer) {
            if (moved) {
                circuit.append(CircuitGate::DEPOLARIZE1, all, noise.shift_rate());
            }
            circuit.append(CircuitGate::TICK, {});
            continue;
        }

        std::vector<char> touched(nq, 0);
        std::vector<char> measured(nq, 0);
        bool has_measurement = false;
        for (const auto &inst : layer) {
            std::vector<int> qs;
            for (const auto &ref : inst.targets) {
                int q = program.qubit(ref);
                qs.push_back(q);
                touched[q] = 1;
            }
            switch (inst.op) {
                case OpKind::prep_plus:
                    circuit.append(CircuitGate::RX, qs);
                    circuit.append(CircuitGate::DEPOLARIZE1, qs, noise.one_qubit_rate());
                    break;
                case OpKind::measure_x: {
                    has_measurement = true;
                    for (int q : qs) {
                        measured[q] = 1;
                    }
                    int first = circuit.append(inst.reset ? CircuitGate::MRX : CircuitGate::MX, qs,
                                               noise.one_qubit_rate());
                    if (keys != nullptr) {
                        for (size_t t = 0; t < qs.size(); t++) {
                            if (t < inst.keys.size() && inst.keys[t] >= 0) {
                                (*keys)[inst.keys[t]] = first + static_cast<int>(t);
                            }
                        }
                    }
                    if (inst.reset) {
                        circuit.append(CircuitGate::DEPOLARIZE1, qs, noise.one_qubit_rate());
                    }
                    break;
                }
                case OpKind::gate1:
                    if (inst.gate != GateKind::H) {
                        throw std::invalid_argument("unsupported single-qubit gate " + gate_name(inst.gate));
                    }
                    circuit.append(CircuitGate::H, qs);
                    circuit.append(CircuitGate::DEPOLARIZE1, qs, noise.one_qubit_rate());
                    break;
                case OpKind::gate2:
                    circuit.append(two_qubit_gate(inst.gate), qs);
                    circuit.append(CircuitGate::DEPOLARIZE2, qs, noise.two_qubit_rate());
                    break;
                default:
                    break;
            }
        }
        std::vector<int> idle;
        if (has_measurement) {
            for (int q = 0; q < nq; q++) {
                if (!measured[q]) {
                    idle.push_back(q);
                }
            }
            circuit.append(CircuitGate::DEPOLARIZE1, idle, noise.measurement_idle_rate());
        } else {
            for (int q = 0; q < nq; q++) {
                if (!touched[q]) {
                    idle.push_back(q);
                }
            }
            circuit.append(CircuitGate::DEPOLARIZE1, idle, noise.idle_rate());
        }
        circuit.append(CircuitGate::TICK, {});
    }
}

NoisyCircuit lower_to_circuit(const MachineProgram &program, const NoiseModel &noise, std::map<int, int> *keys) {
    validate_program(program);
    NoisyCircuit circuit(program.num_qubits);
    lower_into(circuit, program, noise, keys);
    return circuit;
}

}  // namespace modqec
