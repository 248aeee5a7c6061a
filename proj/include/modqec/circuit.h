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

#ifndef MODQEC_CIRCUIT_H
#define MODQEC_CIRCUIT_H

#include <iosfwd>
#include <string>
#include <vector>

namespace modqec {

enum class CircuitGate {
    R,
    RX,
    H,
    CX,
    CY,
    CZ,
    M,
    MX,
    MR,
    MRX,
    X_ERROR,
    Z_ERROR,
    DEPOLARIZE1,
    DEPOLARIZE2,
    TICK,
};

std::string circuit_gate_name(CircuitGate g);
bool is_measurement(CircuitGate g);
bool is_noise(CircuitGate g);
bool is_two_qubit(CircuitGate g);

/// Measurements carry their flip probability in `arg`; noise channels their rate.
struct CircuitOp {
    CircuitGate gate = CircuitGate::TICK;
    double arg = 0;
    std::vector<int> targets;
    bool operator==(const CircuitOp &) const = default;
};

/// Flat circuit over qubits that all start in |0>. Detectors and observables list absolute
/// measurement indices.
class NoisyCircuit {
   public:
    NoisyCircuit() = default;
    explicit NoisyCircuit(int num_qubits) : num_qubits_(num_qubits) {}

    int num_qubits() const { return num_qubits_; }
    int num_measurements() const { return num_measurements_; }
    const std::vector<CircuitOp> &ops() const { return ops_; }
    const std::vector<std::vector<int>> &detectors() const { return detectors_; }
    const std::vector<std::vector<int>> &observables() const { return observables_; }

    /// Appends an op; zero-rate noise channels and empty target lists are dropped.
    /// Returns the index of the first measurement it records, or -1.
    int append(CircuitGate gate, const std::vector<int> &targets, double arg = 0);
    void add_detector(std::vector<int> measurements);
    void add_observable(std::vector<int> measurements);

    size_t count_noise_channels() const;
    size_t count_gate(CircuitGate g) const;
    NoisyCircuit without_noise() const;
    bool operator==(const NoisyCircuit &) const = default;

   private:
    int num_qubits_ = 0;
    int num_measurements_ = 0;
    std::vector<CircuitOp> ops_;
    std::vector<std::vector<int>> detectors_;
    std::vector<std::vector<int>> observables_;
};

void write_circuit(std::ostream &out, const NoisyCircuit &circuit);
std::string circuit_to_string(const NoisyCircuit &circuit);
NoisyCircuit read_circuit(std::istream &in);
NoisyCircuit circuit_from_string(const std::string &text);

}  // namespace modqec

#endif
