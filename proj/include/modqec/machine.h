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

#ifndef MODQEC_MACHINE_H
#define MODQEC_MACHINE_H

#include <stdexcept>
#include <string>
#include <vector>

namespace modqec {

enum class Parallelism { full, chain };

/// Row 0 is fixed; rows 1..num_moving_rows shift independently.
struct ArrayConfig {
    int num_moving_rows = 1;
    int L = 1;
    int module_size = 1;
    bool flat = false;
    Parallelism parallelism = Parallelism::full;

    int num_rows() const { return num_moving_rows + 1; }
    bool operator==(const ArrayConfig &) const = default;
};

/// A qubit named by the module that owns it (row, home cell) and its slot in the module.
/// In flat mode the slot is the position before any intra-module shift.
struct QubitRef {
    int row = 0;
    int module = 0;
    int slot = 0;
    auto operator<=>(const QubitRef &) const = default;
};

enum class OpKind { prep_plus, measure_x, gate1, gate2, shift, intra_shift };
enum class GateKind { none, H, CX, CY, CZ };

struct Instruction {
    OpKind op = OpKind::prep_plus;
    GateKind gate = GateKind::none;
    /// Gate2 targets come in (control, target) pairs.
    std::vector<QubitRef> targets;
    /// Per-target measurement keys for measure_x, -1 when unkeyed.
    std::vector<int> keys;
    bool reset = false;
    int row = 0;
    int module = 0;
    int amount = 0;

    static Instruction prep_plus(std::vector<QubitRef> targets);
    static Instruction measure_x(std::vector<QubitRef> targets, std::vector<int> keys, bool reset);
    static Instruction gate1(GateKind kind, std::vector<QubitRef> targets);
    static Instruction gate2(GateKind kind, std::vector<QubitRef> pairs);
    static Instruction shift(int row, int amount);
    static Instruction intra_shift(int row, int module, int amount);

    bool operator==(const Instruction &) const = default;
};

using Layer = std::vector<Instruction>;

struct MachineProgram {
    ArrayConfig config;
    int num_qubits = 0;
    /// qubit_map[row][module][slot] is a circuit qubit index or -1.
    std::vector<std::vector<std::vector<int>>> qubit_map;
    std::vector<Layer> layers;

    /// Allocates an all-empty qubit map for the configuration.
    static MachineProgram empty(const ArrayConfig &config, int num_qubits);
    int qubit(const QubitRef &ref) const;
    bool operator==(const MachineProgram &) const = default;
};

enum class LayerCategory { two_qubit, shift, intra_shift, meas_reset, prep, single_qubit };

/// Each layer counts once, in the highest-priority category it contains:
/// two_qubit > shift > intra_shift > meas_reset > prep > single_qubit.
LayerCategory categorize(const Layer &layer);

struct DepthReport {
    int two_qubit_layers = 0;
    int shift_layers = 0;
    int intra_shift_layers = 0;
    int meas_reset_layers = 0;
    int prep_layers = 0;
    int single_qubit_layers = 0;
    int total_depth = 0;
    int total_cx = 0;
};

class ProgramError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Positions of moving-row modules. offset[row] is the accumulated shift of that row and
/// intra[row][module] the accumulated intra-module shift.
struct ModulePositions {
    int L = 1;
    int n = 1;
    std::vector<int> offset;
    std::vector<std::vector<int>> intra;

    static ModulePositions initial(const ArrayConfig &config);
    int cell_of(int row, int module) const;
    int position_of(const QubitRef &q) const;
};

/// Module at cell i of `row` moves to (i + s) mod L. Throws when row is the fixed row.
ModulePositions apply_shift(ModulePositions positions, int row, int s);
ModulePositions apply_intra_shift(ModulePositions positions, int row, int module, int s);

/// Checks every layer against the machine rules and returns its depth accounting.
/// Throws ProgramError naming the offending layer.
DepthReport validate_program(const MachineProgram &program);

/// Splits gate layers so that each module takes part in at most one two-qubit gate per
/// layer. Other instructions stay in the first sub-layer. The result uses chain parallelism.
MachineProgram serialize_chain_sequential(const MachineProgram &program);

std::string gate_name(GateKind kind);

}  // namespace modqec

#endif
