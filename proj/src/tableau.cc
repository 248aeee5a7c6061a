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

#include "modqec/tableau.h"

#include <bit>
#include <stdexcept>

namespace modqec {

Tableau::Tableau(size_t num_qubits) : n_(num_qubits), rows_(2 * num_qubits) {
    for (size_t k = 0; k < 2 * n_; k++) {
        rows_[k].x = BitVec(n_);
        rows_[k].z = BitVec(n_);
    }
    for (size_t q = 0; q < n_; q++) {
        rows_[q].x.set(q, true);
        rows_[n_ + q].z.set(q, true);
    }
}

void Tableau::h(size_t q) {
    for (auto &row : rows_) {
        bool xb = row.x.get(q);
        bool zb = row.z.get(q);
        row.r ^= xb && zb;
        row.x.set(q, zb);
        row.z.set(q, xb);
    }
}

void Tableau::s(size_t q) {
    for (auto &row : rows_) {
        bool xb = row.x.get(q);
        bool zb = row.z.get(q);
        row.r ^= xb && zb;
        row.z.set(q, zb ^ xb);
    }
}

void Tableau::x(size_t q) {
    for (auto &row : rows_) {
        row.r ^= row.z.get(q);
    }
}

void Tableau::cx(size_t c, size_t t) {
    for (auto &row : rows_) {
        bool xc = row.x.get(c);
        bool zc = row.z.get(c);
        bool xt = row.x.get(t);
        bool zt = row.z.get(t);
        row.r ^= xc && zt && !(xt ^ zc);
        row.x.set(t, xt ^ xc);
        row.z.set(c, zc ^ zt);
    }
}

void Tableau::cz(size_t a, size_t b) {
    h(b);
    cx(a, b);
    h(b);
}

void Tableau::cy(size_t c, size_t t) {
    // CY = S_t CX S_t^dagger
    s(t);
    s(t);
    s(t);
    cx(c, t);
    s(t);
}

void Tableau::rowsum(Row &h, const Row &i) const {
    int sum = 2 * (h.r ? 1 : 0) + 2 * (i.r ? 1 : 0);
    const uint64_t *x1 = i.x.data();
    const uint64_t *z1 = i.z.data();
    const uint64_t *x2 = h.x.data();
    const uint64_t *z2 = h.z.data();
    for (size_t w = 0; w < i.x.num_words(); w++) {
        uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        uint64_t plus = (a & b & d & ~c) | (a & ~b & d & c) | (~a & b & c & ~d);
        uint64_t minus = (a & b & c & ~d) | (a & ~b & d & ~c) | (~a & b & c & d);
        sum += std::popcount(plus) - std::popcount(minus);
    }
    h.r = ((sum % 4) + 4) % 4 != 0;
    h.x ^= i.x;
    h.z ^= i.z;
}

bool Tableau::is_deterministic_z(size_t q) const {
    for (size_t k = n_; k < 2 * n_; k++) {
        if (rows_[k].x.get(q)) {
            return false;
        }
    }
    return true;
}

bool Tableau::measure_z(size_t q, bool choice) {
    size_t p = 2 * n_;
    for (size_t k = n_; k < 2 * n_; k++) {
        if (rows_[k].x.get(q)) {
            p = k;
            break;
        }
    }
    if (p < 2 * n_) {
        for (size_t k = 0; k < 2 * n_; k++) {
            if (k != p && rows_[k].x.get(q)) {
                rowsum(rows_[k], rows_[p]);
            }
        }
        rows_[p - n_] = rows_[p];
        rows_[p].x.clear();
        rows_[p].z.clear();
        rows_[p].z.set(q, true);
        rows_[p].r = choice;
        return choice;
    }
    Row scratch{BitVec(n_), BitVec(n_), false};
    for (size_t k = 0; k < n_; k++) {
        if (rows_[k].x.get(q)) {
            rowsum(scratch, rows_[k + n_]);
        }
    }
    return scratch.r;
}

bool Tableau::measure_x(size_t q, bool choice) {
    h(q);
    bool out = measure_z(q, choice);
    h(q);
    return out;
}

void Tableau::reset_z(size_t q) {
    if (measure_z(q, false)) {
        x(q);
    }
}

void Tableau::reset_x(size_t q) {
    reset_z(q);
    h(q);
}

int Tableau::expectation(const PauliOperator &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match tableau");
    }
    for (size_t k = n_; k < 2 * n_; k++) {
        if (!(rows_[k].x.dot(p.zs()) == rows_[k].z.dot(p.xs()))) {
            return 0;
        }
    }
    Row scratch{BitVec(n_), BitVec(n_), false};
    for (size_t k = 0; k < n_; k++) {
        // destabilizer k anticommutes with P iff stabilizer k appears in P's decomposition
        if (rows_[k].x.dot(p.zs()) != rows_[k].z.dot(p.xs())) {
            rowsum(scratch, rows_[k + n_]);
        }
    }
    if (!(scratch.x == p.xs() && scratch.z == p.zs())) {
        throw std::logic_error("tableau decomposition failed");
    }
    return scratch.r ? -1 : 1;
}

namespace {

// Applies ops[start..] until the first random measurement. Returns the op index and target
// position of that measurement, or ops.size() when the circuit finished.
struct Cursor {
    size_t op = 0;
    size_t target = 0;
};

bool apply_until_random(const NoisyCircuit &circuit, Tableau &t, Cursor &cur, std::vector<uint8_t> &record) {
    const auto &ops = circuit.ops();
    for (; cur.op < ops.size(); cur.op++, cur.target = 0) {
        const CircuitOp &op = ops[cur.op];
        const auto &tg = op.targets;
        switch (op.gate) {
            case CircuitGate::R:
                for (int q : tg) {
                    t.reset_z(q);
                }
                break;
            case CircuitGate::RX:
                for (int q : tg) {
                    t.reset_x(q);
                }
                break;
            case CircuitGate::H:
                for (int q : tg) {
                    t.h(q);
                }
                break;
            case CircuitGate::CX:
                for (size_t k = 0; k + 1 < tg.size(); k += 2) {
                    t.cx(tg[k], tg[k + 1]);
                }
                break;
            case CircuitGate::CY:
                for (size_t k = 0; k + 1 < tg.size(); k += 2) {
                    t.cy(tg[k], tg[k + 1]);
                }
                break;
            case CircuitGate::CZ:
                for (size_t k = 0; k + 1 < tg.size(); k += 2) {
                    t.cz(tg[k], tg[k + 1]);
                }
                break;
            case CircuitGate::M:
            case CircuitGate::MX:
            case CircuitGate::MR:
            case CircuitGate::MRX: {
                bool xb = op.gate == CircuitGate::MX || op.gate == CircuitGate::MRX;
                bool reset = op.gate == CircuitGate::MR || op.gate == CircuitGate::MRX;
                for (; cur.target < tg.size(); cur.target++) {
                    int q = tg[cur.target];
                    if (xb) {
                        t.h(q);
                    }
                    if (!t.is_deterministic_z(q)) {
                        if (xb) {
                            t.h(q);
                        }
                        return true;
                    }
                    bool bit = t.measure_z(q);
                    record.push_back(bit);
                    if (reset && bit) {
                        t.x(q);
                    }
                    if (xb) {
                        t.h(q);
                    }
                }
                break;
            }
            default:
                break;
        }
    }
    return false;
}

void finish_random(const NoisyCircuit &circuit, Tableau &t, Cursor &cur, std::vector<uint8_t> &record, bool bit) {
    const CircuitOp &op = circuit.ops()[cur.op];
    bool xb = op.gate == CircuitGate::MX || op.gate == CircuitGate::MRX;
    bool reset = op.gate == CircuitGate::MR || op.gate == CircuitGate::MRX;
    int q = op.targets[cur.target];
    if (xb) {
        t.h(q);
    }
    t.measure_z(q, bit);
    record.push_back(bit);
    if (reset && bit) {
        t.x(q);
    }
    if (xb) {
        t.h(q);
    }
    cur.target++;
}

}  // namespace

TableauRun tableau_run(const NoisyCircuit &circuit, std::mt19937_64 *rng) {
    Tableau t(circuit.num_qubits());
    TableauRun run;
    Cursor cur;
    while (apply_until_random(circuit, t, cur, run.measurements)) {
        bool bit = rng != nullptr ? ((*rng)() & 1) : false;
        finish_random(circuit, t, cur, run.measurements, bit);
        run.random_measurements++;
    }
    return run;
}

std::vector<TableauBranch> enumerate_branches(const NoisyCircuit &circuit, size_t max_branches) {
    struct Pending {
        double probability;
        std::vector<uint8_t> record;
        Tableau state;
        Cursor cur;
    };
    std::vector<Pending> stack;
    stack.push_back(Pending{1.0, {}, Tableau(circuit.num_qubits()), Cursor{}});
    std::vector<TableauBranch> out;
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (!apply_until_random(circuit, cur.state, cur.cur, cur.record)) {
            out.push_back(TableauBranch{cur.probability, std::move(cur.record), std::move(cur.state)});
            if (out.size() > max_branches) {
                throw std::length_error("too many measurement branches");
            }
            continue;
        }
        Pending other = cur;
        cur.probability /= 2;
        other.probability /= 2;
        finish_random(circuit, cur.state, cur.cur, cur.record, false);
        finish_random(circuit, other.state, other.cur, other.record, true);
        stack.push_back(std::move(other));
        stack.push_back(std::move(cur));
        if (stack.size() + out.size() > max_branches) {
            throw std::length_error("too many measurement branches");
        }
    }
    return out;
}

}  // namespace modqec
