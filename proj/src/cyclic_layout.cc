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

#include "modqec/cyclic_layout.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace modqec {

int cyclic_depth_bound(int r, int n, int L) { return 3 + ((r + n - 1) / n + L - 1) * (n + 1); }

namespace {

struct CellGate {
    int anc;
    int slot;
    char pauli;
};

struct CellOption {
    unsigned parity = 0;
    int depth = 0;
    std::vector<int> layers;
};

int pair_bit(int a, int b, int n) {
    // Index of the unordered ancilla pair (a < b).
    int idx = 0;
    for (int x = 0; x < a; x++) {
        idx += n - 1 - x;
    }
    return idx + (b - a - 1);
}

unsigned parity_of(const std::vector<CellGate> &gates, const std::vector<int> &layers, int n) {
    unsigned parity = 0;
    for (size_t g = 0; g < gates.size(); g++) {
        for (size_t h = 0; h < gates.size(); h++) {
            const auto &a = gates[g];
            const auto &b = gates[h];
            if (a.slot != b.slot || a.anc >= b.anc || a.pauli == b.pauli) {
                continue;
            }
            if (layers[h] < layers[g]) {
                parity ^= 1u << pair_bit(a.anc, b.anc, n);
            }
        }
    }
    return parity;
}

/// Ancilla-major list schedule: anticommuting gates on a data qubit keep ancilla order.
CellOption strict_schedule(const std::vector<CellGate> &gates) {
    CellOption out;
    out.layers.assign(gates.size(), -1);
    std::vector<size_t> order(gates.size());
    for (size_t k = 0; k < order.size(); k++) {
        order[k] = k;
    }
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return std::pair(gates[x].anc, gates[x].slot) < std::pair(gates[y].anc, gates[y].slot);
    });
    std::map<int, std::set<int>> anc_busy;
    std::map<int, std::set<int>> slot_busy;
    for (size_t k : order) {
        const auto &g = gates[k];
        int earliest = 0;
        for (size_t h = 0; h < gates.size(); h++) {
            if (out.layers[h] >= 0 && gates[h].slot == g.slot && gates[h].pauli != g.pauli) {
                earliest = std::max(earliest, out.layers[h] + 1);
            }
        }
        int layer = earliest;
        while (anc_busy[g.anc].count(layer) || slot_busy[g.slot].count(layer)) {
            layer++;
        }
        out.layers[k] = layer;
        anc_busy[g.anc].insert(layer);
        slot_busy[g.slot].insert(layer);
        out.depth = std::max(out.depth, layer + 1);
    }
    return out;
}

/// Cheapest schedule of depth at most `limit` for each reachable parity vector.
void enumerate_schedules(const std::vector<CellGate> &gates, int n, int limit, std::map<unsigned, CellOption> &best) {
    std::vector<int> layers(gates.size(), -1);
    std::vector<unsigned> anc_mask(limit, 0);
    std::vector<unsigned> slot_mask(limit, 0);
    auto rec = [&](auto &&self, size_t k, int depth) -> void {
        if (k == gates.size()) {
            unsigned parity = parity_of(gates, layers, n);
            auto it = best.find(parity);
            if (it == best.end() || depth < it->second.depth) {
                best[parity] = CellOption{parity, depth, layers};
            }
            return;
        }
        const auto &g = gates[k];
        for (int l = 0; l < limit; l++) {
            if ((anc_mask[l] >> g.anc) & 1 || (slot_mask[l] >> g.slot) & 1) {
                continue;
            }
            anc_mask[l] |= 1u << g.anc;
            slot_mask[l] |= 1u << g.slot;
            layers[k] = l;
            self(self, k + 1, std::max(depth, l + 1));
            anc_mask[l] &= ~(1u << g.anc);
            slot_mask[l] &= ~(1u << g.slot);
        }
        layers[k] = -1;
    };
    rec(rec, 0, 0);
}

std::vector<CellOption> cell_options(const std::vector<CellGate> &gates, int n) {
    std::vector<CellOption> out;
    CellOption strict = strict_schedule(gates);
    if (n > 3 || gates.empty()) {
        out.push_back(strict);
        return out;
    }
    std::map<unsigned, CellOption> best;
    enumerate_schedules(gates, n, n, best);
    bool have_zero = best.count(0) > 0;
    for (auto &[parity, opt] : best) {
        out.push_back(opt);
    }
    if (!have_zero) {
        out.push_back(strict);
    }
    return out;
}

/// Picks one option per cell so the parities cancel, minimizing total depth.
std::vector<CellOption> plan_block(const std::vector<std::vector<CellGate>> &cells, int n) {
    struct State {
        int cost;
        std::vector<int> pick;
    };
    std::vector<std::vector<CellOption>> options;
    for (const auto &g : cells) {
        options.push_back(cell_options(g, n));
    }
    std::map<unsigned, State> dp;
    dp[0] = State{0, {}};
    for (const auto &opts : options) {
        std::map<unsigned, State> next;
        for (const auto &[parity, st] : dp) {
            for (size_t k = 0; k < opts.size(); k++) {
                unsigned p = parity ^ opts[k].parity;
                int cost = st.cost + opts[k].depth;
                auto it = next.find(p);
                if (it == next.end() || cost < it->second.cost) {
                    State s{cost, st.pick};
                    s.pick.push_back(static_cast<int>(k));
                    next[p] = std::move(s);
                }
            }
        }
        dp = std::move(next);
    }
    std::vector<CellOption> out;
    const State &st = dp.at(0);
    for (size_t c = 0; c < options.size(); c++) {
        out.push_back(options[c][st.pick[c]]);
    }
    return out;
}

GateKind controlled(char pauli) {
    switch (pauli) {
        case 'X':
            return GateKind::CX;
        case 'Y':
            return GateKind::CY;
        default:
            return GateKind::CZ;
    }
}

}  // namespace

CyclicLayoutResult cyclic_layout(const std::vector<PauliOperator> &paulis, int n, int L,
                                 const std::vector<std::pair<int, int>> &placement) {
    if (paulis.empty()) {
        throw std::invalid_argument("cyclic layout needs at least one operator");
    }
    if (n < 1 || L < 2) {
        throw std::invalid_argument("cyclic layout needs n >= 1 and L >= 2");
    }
    int N = static_cast<int>(paulis[0].num_qubits());
    for (const auto &p : paulis) {
        if (static_cast<int>(p.num_qubits()) != N) {
            throw std::invalid_argument("operators act on different qubit counts");
        }
    }
    std::vector<std::pair<int, int>> place = placement;
    if (place.empty()) {
        for (int q = 0; q < N; q++) {
            place.push_back({q / n, q % n});
        }
    }
    if (static_cast<int>(place.size()) != N) {
        throw std::invalid_argument("placement size differs from qubit count");
    }
    ArrayConfig cfg;
    cfg.num_moving_rows = 1;
    cfg.L = L;
    cfg.module_size = n;
    CyclicLayoutResult result;
    MachineProgram &prog = result.program;
    prog = MachineProgram::empty(cfg, N + L * n);
    // data_at[cell][slot] = data qubit or -1.
    std::vector<std::vector<int>> data_at(L, std::vector<int>(n, -1));
    for (int q = 0; q < N; q++) {
        auto [cell, slot] = place[q];
        if (cell < 0 || cell >= L - 1 || slot < 0 || slot >= n) {
            throw std::invalid_argument("data qubit " + std::to_string(q) +
                                        " exceeds the fixed-row capacity of the first L-1 cells");
        }
        if (data_at[cell][slot] >= 0) {
            throw std::invalid_argument("two data qubits share a fixed-row slot");
        }
        data_at[cell][slot] = q;
        prog.qubit_map[0][cell][slot] = q;
    }
    for (int h = 0; h < L; h++) {
        for (int s = 0; s < n; s++) {
            prog.qubit_map[1][h][s] = N + h * n + s;
        }
    }

    int r = static_cast<int>(paulis.size());
    std::vector<std::vector<int>> assigned(L, std::vector<int>(n, -1));
    // plan[h][cell] = chosen schedule for the module's current operators.
    std::vector<std::vector<std::vector<CellGate>>> gates(L);
    std::vector<std::vector<CellOption>> plan(L);
    int next_op = 0;
    auto assign = [&](int h) {
        gates[h].assign(L - 1, {});
        for (int s = 0; s < n; s++) {
            assigned[h][s] = next_op < r ? next_op : -1;
            if (next_op < r) {
                const auto &p = paulis[next_op];
                for (size_t q : p.support()) {
                    gates[h][place[q].first].push_back(CellGate{s, place[q].second, p.get(q)});
                }
            }
            next_op++;
        }
        plan[h] = plan_block(gates[h], n);
    };

    std::vector<QubitRef> all_anc;
    for (int h = 0; h < L; h++) {
        for (int s = 0; s < n; s++) {
            all_anc.push_back({1, h, s});
        }
    }
    prog.layers.push_back({Instruction::prep_plus(all_anc)});
    for (int h = 0; h < L; h++) {
        gates[h].assign(L - 1, {});
        plan[h].assign(L - 1, CellOption{});
    }
    assign(L - 1);

    auto mod = [&](int a) { return ((a % L) + L) % L; };
    result.iterations = (r + n - 1) / n + L;
    for (int t = 1; t <= result.iterations; t++) {
        prog.layers.push_back({Instruction::shift(1, 1)});
        std::vector<Layer> gate_layers;
        for (int c = 0; c < L - 1; c++) {
            int h = mod(c - t);
            const auto &cell_gates = gates[h][c];
            const auto &opt = plan[h][c];
            for (size_t k = 0; k < cell_gates.size(); k++) {
                const auto &g = cell_gates[k];
                size_t layer = opt.layers[k];
                if (gate_layers.size() <= layer) {
                    gate_layers.resize(layer + 1);
                }
                GateKind kind = controlled(g.pauli);
                Instruction *slot = nullptr;
                for (auto &ins : gate_layers[layer]) {
                    if (ins.gate == kind) {
                        slot = &ins;
                    }
                }
                if (slot == nullptr) {
                    gate_layers[layer].push_back(Instruction::gate2(kind, {}));
                    slot = &gate_layers[layer].back();
                }
                slot->targets.push_back({1, h, g.anc});
                slot->targets.push_back({0, c, g.slot});
            }
        }
        int last = mod(L - 1 - t);
        std::vector<QubitRef> targets;
        for (int s = 0; s < n; s++) {
            targets.push_back({1, last, s});
        }
        Instruction mr = Instruction::measure_x(targets, assigned[last], true);
        if (gate_layers.empty()) {
            gate_layers.push_back({});
        }
        gate_layers[0].insert(gate_layers[0].begin(), mr);
        for (auto &layer : gate_layers) {
            if (!layer.empty()) {
                prog.layers.push_back(std::move(layer));
            }
        }
        assign(last);
    }
    return result;
}

}  // namespace modqec
