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

#include <map>
#include <set>

namespace modqec {

static int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

Instruction Instruction::prep_plus(std::vector<QubitRef> targets) {
    Instruction ins;
    ins.op = OpKind::prep_plus;
    ins.targets = std::move(targets);
    return ins;
}

Instruction Instruction::measure_x(std::vector<QubitRef> targets, std::vector<int> keys, bool reset) {
    Instruction ins;
    ins.op = OpKind::measure_x;
    ins.targets = std::move(targets);
    ins.keys = std::move(keys);
    ins.reset = reset;
    if (ins.keys.empty()) {
        ins.keys.assign(ins.targets.size(), -1);
    }
    return ins;
}

Instruction Instruction::gate1(GateKind kind, std::vector<QubitRef> targets) {
    Instruction ins;
    ins.op = OpKind::gate1;
    ins.gate = kind;
    ins.targets = std::move(targets);
    return ins;
}

Instruction Instruction::gate2(GateKind kind, std::vector<QubitRef> pairs) {
    Instruction ins;
    ins.op = OpKind::gate2;
    ins.gate = kind;
    ins.targets = std::move(pairs);
    return ins;
}

Instruction Instruction::shift(int row, int amount) {
    Instruction ins;
    ins.op = OpKind::shift;
    ins.row = row;
    ins.amount = amount;
    return ins;
}

Instruction Instruction::intra_shift(int row, int module, int amount) {
    Instruction ins;
    ins.op = OpKind::intra_shift;
    ins.row = row;
    ins.module = module;
    ins.amount = amount;
    return ins;
}

MachineProgram MachineProgram::empty(const ArrayConfig &config, int num_qubits) {
    MachineProgram p;
    p.config = config;
    p.num_qubits = num_qubits;
    p.qubit_map.assign(config.num_rows(),
                       std::vector<std::vector<int>>(config.L, std::vector<int>(config.module_size, -1)));
    return p;
}

int MachineProgram::qubit(const QubitRef &ref) const { return qubit_map[ref.row][ref.module][ref.slot]; }

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::CX:
            return "CX";
        case GateKind::CY:
            return "CY";
        case GateKind::CZ:
            return "CZ";
        default:
            return "NONE";
    }
}

LayerCategory categorize(const Layer &layer) {
    bool has[6] = {false, false, false, false, false, false};
    for (const auto &ins : layer) {
        switch (ins.op) {
            case OpKind::gate2:
                has[0] = true;
                break;
            case OpKind::shift:
                has[1] = true;
                break;
            case OpKind::intra_shift:
                has[2] = true;
                break;
            case OpKind::measure_x:
                has[3] = true;
                break;
            case OpKind::prep_plus:
                has[4] = true;
                break;
            case OpKind::gate1:
                has[5] = true;
                break;
        }
    }
    for (int c = 0; c < 6; c++) {
        if (has[c]) {
            return static_cast<LayerCategory>(c);
        }
    }
    return LayerCategory::single_qubit;
}

ModulePositions ModulePositions::initial(const ArrayConfig &config) {
    ModulePositions p;
    p.L = config.L;
    p.n = config.module_size;
    p.offset.assign(config.num_rows(), 0);
    p.intra.assign(config.num_rows(), std::vector<int>(config.L, 0));
    return p;
}

int ModulePositions::cell_of(int row, int module) const { return mod(module + offset[row], L); }

int ModulePositions::position_of(const QubitRef &q) const { return mod(q.slot + intra[q.row][q.module], n); }

ModulePositions apply_shift(ModulePositions positions, int row, int s) {
    if (row <= 0 || row >= static_cast<int>(positions.offset.size())) {
        throw ProgramError("row " + std::to_string(row) + " is not a moving row");
    }
    positions.offset[row] = mod(positions.offset[row] + s, positions.L);
    return positions;
}

ModulePositions apply_intra_shift(ModulePositions positions, int row, int module, int s) {
    if (row < 0 || row >= static_cast<int>(positions.intra.size()) || module < 0 || module >= positions.L) {
        throw ProgramError("intra-module shift on a missing module");
    }
    positions.intra[row][module] = mod(positions.intra[row][module] + s, positions.n);
    return positions;
}

namespace {

std::string ref_str(const QubitRef &q) {
    return std::to_string(q.row) + ":" + std::to_string(q.module) + ":" + std::to_string(q.slot);
}

struct LayerChecker {
    const MachineProgram &program;
    const ModulePositions &pos;
    size_t layer_index;
    std::set<QubitRef> used;

    [[noreturn]] void fail(const std::string &msg) const {
        throw ProgramError("layer " + std::to_string(layer_index) + ": " + msg);
    }

    void touch(const QubitRef &q) {
        const auto &cfg = program.config;
        if (q.row < 0 || q.row >= cfg.num_rows() || q.module < 0 || q.module >= cfg.L || q.slot < 0 ||
            q.slot >= cfg.module_size) {
            fail("qubit " + ref_str(q) + " outside the array");
        }
        if (program.qubit(q) < 0) {
            fail("qubit " + ref_str(q) + " is not mapped to a circuit qubit");
        }
        if (!used.insert(q).second) {
            fail("qubit " + ref_str(q) + " used twice");
        }
    }

    void check_pair(const QubitRef &a, const QubitRef &b) {
        if (a.row == b.row && a.module == b.module) {
            return;
        }
        if (a.row == b.row) {
            fail("gate between different modules of row " + std::to_string(a.row));
        }
        if (pos.cell_of(a.row, a.module) != pos.cell_of(b.row, b.module)) {
            fail("misaligned gate between " + ref_str(a) + " and " + ref_str(b));
        }
        if (program.config.flat && pos.position_of(a) != pos.position_of(b)) {
            fail("flat gate between unequal positions " + ref_str(a) + " and " + ref_str(b));
        }
    }
};

}  // namespace

DepthReport validate_program(const MachineProgram &program) {
    const auto &cfg = program.config;
    if (cfg.num_moving_rows < 1 || cfg.num_moving_rows > 2 || cfg.L < 1 || cfg.module_size < 1) {
        throw ProgramError("invalid array configuration");
    }
    if (static_cast<int>(program.qubit_map.size()) != cfg.num_rows()) {
        throw ProgramError("qubit map does not match the array shape");
    }
    for (const auto &row : program.qubit_map) {
        if (static_cast<int>(row.size()) != cfg.L) {
            throw ProgramError("qubit map does not match the array shape");
        }
        for (const auto &module : row) {
            if (static_cast<int>(module.size()) != cfg.module_size) {
                throw ProgramError("qubit map does not match the module size");
            }
            for (int q : module) {
                if (q >= program.num_qubits) {
                    throw ProgramError("qubit map entry " + std::to_string(q) + " exceeds qubit count");
                }
            }
        }
    }

    DepthReport report;
    ModulePositions pos = ModulePositions::initial(cfg);
    for (size_t li = 0; li < program.layers.size(); li++) {
        const Layer &layer = program.layers[li];
        LayerChecker check{program, pos, li, {}};
        if (layer.empty()) {
            check.fail("empty layer");
        }
        bool moves = false;
        bool acts = false;
        std::set<int> shifted_rows;
        std::set<std::pair<int, int>> intra_modules;
        std::map<std::pair<int, int>, int> gates_per_module;
        ModulePositions next = pos;
        for (const auto &ins : layer) {
            switch (ins.op) {
                case OpKind::shift:
                    moves = true;
                    if (!shifted_rows.insert(ins.row).second) {
                        check.fail("row " + std::to_string(ins.row) + " shifted twice");
                    }
                    if (ins.row <= 0 || ins.row >= cfg.num_rows()) {
                        check.fail("shift of non-moving row " + std::to_string(ins.row));
                    }
                    next = apply_shift(next, ins.row, ins.amount);
                    break;
                case OpKind::intra_shift:
                    moves = true;
                    if (!cfg.flat) {
                        check.fail("intra-module shift on a non-flat array");
                    }
                    if (ins.row < 0 || ins.row >= cfg.num_rows() || ins.module < 0 || ins.module >= cfg.L) {
                        check.fail("intra-module shift on a missing module");
                    }
                    if (!intra_modules.insert({ins.row, ins.module}).second) {
                        check.fail("module intra-shifted twice");
                    }
                    next = apply_intra_shift(next, ins.row, ins.module, ins.amount);
                    break;
                case OpKind::gate2:
                    acts = true;
                    if (ins.targets.size() % 2) {
                        check.fail("two-qubit gate with an odd number of targets");
                    }
                    if (ins.gate != GateKind::CX && ins.gate != GateKind::CY && ins.gate != GateKind::CZ) {
                        check.fail("unsupported two-qubit gate");
                    }
                    for (size_t k = 0; k < ins.targets.size(); k += 2) {
                        const auto &a = ins.targets[k];
                        const auto &b = ins.targets[k + 1];
                        check.touch(a);
                        check.touch(b);
                        check.check_pair(a, b);
                        report.total_cx++;
                        int &ca = gates_per_module[{a.row, a.module}];
                        ca++;
                        if (!(a.row == b.row && a.module == b.module)) {
                            gates_per_module[{b.row, b.module}]++;
                        }
                    }
                    break;
                case OpKind::measure_x:
                    acts = true;
                    if (ins.keys.size() != ins.targets.size()) {
                        check.fail("measurement key count differs from target count");
                    }
                    for (const auto &q : ins.targets) {
                        check.touch(q);
                    }
                    break;
                case OpKind::prep_plus:
                case OpKind::gate1:
                    acts = true;
                    if (ins.op == OpKind::gate1 && ins.gate != GateKind::H) {
                        check.fail("unsupported single-qubit gate");
                    }
                    for (const auto &q : ins.targets) {
                        check.touch(q);
                    }
                    break;
            }
        }
        if (moves && acts) {
            check.fail("shift layers cannot contain qubit operations");
        }
        if (cfg.parallelism == Parallelism::chain) {
            for (const auto &[module, count] : gates_per_module) {
                if (count > 1) {
                    check.fail("module " + std::to_string(module.first) + ":" + std::to_string(module.second) +
                               " has " + std::to_string(count) + " two-qubit gates in one layer");
                }
            }
        }
        pos = next;
        switch (categorize(layer)) {
            case LayerCategory::two_qubit:
                report.two_qubit_layers++;
                break;
            case LayerCategory::shift:
                report.shift_layers++;
                break;
            case LayerCategory::intra_shift:
                report.intra_shift_layers++;
                break;
            case LayerCategory::meas_reset:
                report.meas_reset_layers++;
                break;
            case LayerCategory::prep:
                report.prep_layers++;
                break;
            case LayerCategory::single_qubit:
                report.single_qubit_layers++;
                break;
        }
        report.total_depth++;
    }
    return report;
}

MachineProgram serialize_chain_sequential(const MachineProgram &program) {
    MachineProgram out = program;
    out.config.parallelism = Parallelism::chain;
    out.layers.clear();
    for (const auto &layer : program.layers) {
        if (categorize(layer) != LayerCategory::two_qubit) {
            out.layers.push_back(layer);
            continue;
        }
        std::vector<Layer> subs(1);
        std::vector<std::set<std::pair<int, int>>> busy(1);
        for (const auto &ins : layer) {
            if (ins.op != OpKind::gate2) {
                subs[0].push_back(ins);
                continue;
            }
            for (size_t k = 0; k < ins.targets.size(); k += 2) {
                std::pair<int, int> ma{ins.targets[k].row, ins.targets[k].module};
                std::pair<int, int> mb{ins.targets[k + 1].row, ins.targets[k + 1].module};
                size_t s = 0;
                while (s < subs.size() && (busy[s].count(ma) || busy[s].count(mb))) {
                    s++;
                }
                if (s == subs.size()) {
                    subs.emplace_back();
                    busy.emplace_back();
                }
                busy[s].insert(ma);
                busy[s].insert(mb);
                Instruction *slot = nullptr;
                for (auto &existing : subs[s]) {
                    if (existing.op == OpKind::gate2 && existing.gate == ins.gate) {
                        slot = &existing;
                        break;
                    }
                }
                if (slot == nullptr) {
                    subs[s].push_back(Instruction::gate2(ins.gate, {}));
                    slot = &subs[s].back();
                }
                slot->targets.push_back(ins.targets[k]);
                slot->targets.push_back(ins.targets[k + 1]);
            }
        }
        for (auto &sub : subs) {
            out.layers.push_back(std::move(sub));
        }
    }
    return out;
}

}  // namespace modqec
