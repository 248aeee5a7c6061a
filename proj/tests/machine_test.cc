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

#include "modqec/machine.h"

#include "gtest/gtest.h"

using namespace modqec;

// Two rows of L modules with module_size slots, qubits numbered row-major.
static MachineProgram small_program(int L, int module_size, bool flat = false) {
    ArrayConfig cfg;
    cfg.L = L;
    cfg.module_size = module_size;
    cfg.flat = flat;
    MachineProgram p = MachineProgram::empty(cfg, 2 * L * module_size);
    int q = 0;
    for (int row = 0; row < 2; row++) {
        for (int m = 0; m < L; m++) {
            for (int s = 0; s < module_size; s++) {
                p.qubit_map[row][m][s] = q++;
            }
        }
    }
    return p;
}

TEST(Machine, shift_moves_modules_cyclically) {
    ArrayConfig cfg;
    cfg.L = 5;
    auto pos = ModulePositions::initial(cfg);
    EXPECT_EQ(pos.cell_of(1, 3), 3);
    pos = apply_shift(pos, 1, 3);
    EXPECT_EQ(pos.cell_of(1, 3), 1);
    EXPECT_EQ(pos.cell_of(0, 3), 3);
    pos = apply_shift(pos, 1, -4);
    EXPECT_EQ(pos.cell_of(1, 0), 4);
    EXPECT_THROW(apply_shift(pos, 0, 1), ProgramError);
    EXPECT_THROW(apply_shift(pos, 2, 1), ProgramError);
}

TEST(Machine, intra_shift_moves_slots) {
    ArrayConfig cfg;
    cfg.L = 2;
    cfg.module_size = 4;
    cfg.flat = true;
    auto pos = ModulePositions::initial(cfg);
    pos = apply_intra_shift(pos, 1, 0, 3);
    EXPECT_EQ(pos.position_of(QubitRef{1, 0, 2}), 1);
    EXPECT_EQ(pos.position_of(QubitRef{1, 1, 2}), 2);
    EXPECT_THROW(apply_intra_shift(pos, 1, 2, 1), ProgramError);
}

TEST(Machine, aligned_gates_after_shift_validate) {
    MachineProgram p = small_program(3, 2);
    p.layers.push_back({Instruction::prep_plus({{1, 0, 0}, {1, 1, 0}})});
    p.layers.push_back({Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 0}})});
    p.layers.push_back({Instruction::shift(1, 1)});
    p.layers.push_back({Instruction::gate2(GateKind::CZ, {{1, 0, 0}, {0, 1, 1}})});
    p.layers.push_back({Instruction::gate1(GateKind::H, {{0, 2, 0}})});
    p.layers.push_back({Instruction::measure_x({{1, 0, 0}, {1, 1, 0}}, {0, 1}, true)});
    DepthReport r = validate_program(p);
    EXPECT_EQ(r.total_depth, 6);
    EXPECT_EQ(r.two_qubit_layers, 2);
    EXPECT_EQ(r.shift_layers, 1);
    EXPECT_EQ(r.meas_reset_layers, 1);
    EXPECT_EQ(r.prep_layers, 1);
    EXPECT_EQ(r.single_qubit_layers, 1);
    EXPECT_EQ(r.total_cx, 3);
}

TEST(Machine, rejects_rule_violations) {
    auto expect_bad = [](const Layer &layer) {
        MachineProgram p = small_program(3, 2);
        p.layers.push_back(layer);
        EXPECT_THROW(validate_program(p), ProgramError);
    };
    expect_bad({});
    expect_bad({Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 1, 0}})});
    expect_bad({Instruction::gate2(GateKind::CX, {{0, 0, 0}, {0, 1, 0}})});
    expect_bad({Instruction::shift(0, 1)});
    expect_bad({Instruction::shift(1, 1), Instruction::shift(1, 2)});
    expect_bad({Instruction::shift(1, 1), Instruction::gate1(GateKind::H, {{0, 0, 0}})});
    expect_bad({Instruction::gate1(GateKind::H, {{0, 0, 0}, {0, 0, 0}})});
    expect_bad({Instruction::gate1(GateKind::CX, {{0, 0, 0}})});
    expect_bad({Instruction::gate2(GateKind::H, {{0, 0, 0}, {0, 0, 1}})});
    expect_bad({Instruction::gate1(GateKind::H, {{0, 3, 0}})});
    expect_bad({Instruction::intra_shift(1, 0, 1)});
    Instruction meas = Instruction::measure_x({{1, 0, 0}}, {}, false);
    meas.keys.clear();
    expect_bad({meas});
}

TEST(Machine, error_names_the_layer) {
    MachineProgram p = small_program(2, 1);
    p.layers.push_back({Instruction::prep_plus({{1, 0, 0}})});
    p.layers.push_back({Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 1, 0}})});
    try {
        validate_program(p);
        FAIL();
    } catch (const ProgramError &e) {
        EXPECT_NE(std::string(e.what()).find("layer 1"), std::string::npos);
    }
}

TEST(Machine, flat_gates_need_equal_positions) {
    MachineProgram p = small_program(2, 3, true);
    p.layers.push_back({Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 0, 1}})});
    EXPECT_THROW(validate_program(p), ProgramError);
    p.layers = {{Instruction::intra_shift(1, 0, 1)}, {Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 0, 1}})}};
    DepthReport r = validate_program(p);
    EXPECT_EQ(r.intra_shift_layers, 1);
}

TEST(Machine, chain_mode_serializes_module_gates) {
    MachineProgram p = small_program(2, 3);
    p.layers = {{Instruction::gate2(GateKind::CX, {{1, 0, 0}, {0, 0, 0}, {1, 0, 1}, {0, 0, 1}, {1, 1, 0}, {0, 1, 0}}),
                 Instruction::gate2(GateKind::CZ, {{1, 1, 1}, {0, 1, 1}})}};
    EXPECT_EQ(validate_program(p).two_qubit_layers, 1);
    p.config.parallelism = Parallelism::chain;
    EXPECT_THROW(validate_program(p), ProgramError);

    MachineProgram s = serialize_chain_sequential(p);
    EXPECT_EQ(s.config.parallelism, Parallelism::chain);
    DepthReport r = validate_program(s);
    EXPECT_EQ(r.two_qubit_layers, 2);
    EXPECT_EQ(r.total_cx, 4);
}

TEST(Machine, categorize_priority) {
    EXPECT_EQ(categorize({Instruction::prep_plus({}), Instruction::gate1(GateKind::H, {})}), LayerCategory::prep);
    EXPECT_EQ(categorize({Instruction::measure_x({}, {}, false), Instruction::prep_plus({})}),
              LayerCategory::meas_reset);
    EXPECT_EQ(categorize({Instruction::gate2(GateKind::CX, {}), Instruction::measure_x({}, {}, false)}),
              LayerCategory::two_qubit);
    EXPECT_EQ(gate_name(GateKind::CY), "CY");
}
