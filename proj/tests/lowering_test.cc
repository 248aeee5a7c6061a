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

#include <array>
#include <cmath>

#include "gtest/gtest.h"

using namespace modqec;

// Probability that tau independent depolarizing steps of rate q leave a net Pauli error,
// by composing the four-outcome distribution step by step.
static double composed_error(double q, int tau) {
    std::array<double, 4> dist{1, 0, 0, 0};
    for (int t = 0; t < tau; t++) {
        std::array<double, 4> next{0, 0, 0, 0};
        for (int a = 0; a < 4; a++) {
            next[a] += dist[a] * (1 - q);
            for (int e = 1; e < 4; e++) {
                next[a ^ e] += dist[a] * q / 3;
            }
        }
        dist = next;
    }
    return 1 - dist[0];
}

static MachineProgram tiny_program() {
    ArrayConfig cfg;
    cfg.L = 2;
    MachineProgram p = MachineProgram::empty(cfg, 4);
    p.qubit_map[0][0][0] = 0;
    p.qubit_map[0][1][0] = 1;
    p.qubit_map[1][0][0] = 2;
    p.qubit_map[1][1][0] = 3;
    p.layers.push_back({Instruction::prep_plus({{1, 0, 0}})});
    p.layers.push_back({Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 0, 0}})});
    p.layers.push_back({Instruction::shift(1, 1)});
    p.layers.push_back({Instruction::shift(1, 2)});
    p.layers.push_back({Instruction::gate1(GateKind::H, {{0, 1, 0}})});
    p.layers.push_back({Instruction::measure_x({{1, 0, 0}}, {5}, true)});
    return p;
}

TEST(Lowering, rates) {
    NoiseModel noise{1e-2, 30, 20};
    EXPECT_DOUBLE_EQ(noise.two_qubit_rate(), 1e-2);
    EXPECT_DOUBLE_EQ(noise.one_qubit_rate(), 1e-3);
    EXPECT_DOUBLE_EQ(noise.idle_rate(), 1e-4);
    EXPECT_DOUBLE_EQ(noise.shift_rate(), 2e-3);
    EXPECT_NEAR(noise.measurement_idle_rate(), composed_error(1e-4, 30), 1e-15);
    EXPECT_DOUBLE_EQ((NoiseModel{1e-2, 0, 0}).measurement_idle_rate(), 0);
    EXPECT_THROW((NoiseModel{-1e-3, 30, 30}).validate(), std::invalid_argument);
    EXPECT_THROW((NoiseModel{1e-3, -1, 30}).validate(), std::invalid_argument);
}

TEST(Lowering, layer_by_layer) {
    NoiseModel noise{1e-2, 30, 20};
    std::map<int, int> keys;
    NoisyCircuit c = lower_to_circuit(tiny_program(), noise, &keys);
    double midle = noise.measurement_idle_rate();
    std::vector<CircuitOp> want{
        {CircuitGate::RX, 0, {2}},
        {CircuitGate::DEPOLARIZE1, 1e-3, {2}},
        {CircuitGate::DEPOLARIZE1, 1e-4, {0, 1, 3}},
        {CircuitGate::TICK, 0, {}},
        {CircuitGate::CX, 0, {2, 0}},
        {CircuitGate::DEPOLARIZE2, 1e-2, {2, 0}},
        {CircuitGate::DEPOLARIZE1, 1e-4, {1, 3}},
        {CircuitGate::TICK, 0, {}},
        {CircuitGate::DEPOLARIZE1, 2e-3, {0, 1, 2, 3}},
        {CircuitGate::TICK, 0, {}},
        // Shifting by L moves nothing.
        {CircuitGate::TICK, 0, {}},
        {CircuitGate::H, 0, {1}},
        {CircuitGate::DEPOLARIZE1, 1e-3, {1}},
        {CircuitGate::DEPOLARIZE1, 1e-4, {0, 2, 3}},
        {CircuitGate::TICK, 0, {}},
        {CircuitGate::MRX, 1e-3, {2}},
        {CircuitGate::DEPOLARIZE1, 1e-3, {2}},
        {CircuitGate::DEPOLARIZE1, midle, {0, 1, 3}},
        {CircuitGate::TICK, 0, {}},
    };
    ASSERT_EQ(c.ops().size(), want.size());
    for (size_t k = 0; k < want.size(); k++) {
        EXPECT_EQ(c.ops()[k].gate, want[k].gate) << k;
        EXPECT_NEAR(c.ops()[k].arg, want[k].arg, 1e-15) << k;
        EXPECT_EQ(c.ops()[k].targets, want[k].targets) << k;
    }
    EXPECT_EQ(keys, (std::map<int, int>{{5, 0}}));
}

TEST(Lowering, noiseless_model_has_no_channels) {
    NoisyCircuit c = lower_to_circuit(tiny_program(), NoiseModel{});
    EXPECT_EQ(c.count_noise_channels(), 0u);
    EXPECT_EQ(c.count_gate(CircuitGate::TICK), 6u);
}

TEST(Lowering, invalid_program_is_rejected) {
    MachineProgram p = tiny_program();
    p.layers.push_back({Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 0, 0}})});
    EXPECT_THROW(lower_to_circuit(p, NoiseModel{1e-3}), ProgramError);
}
