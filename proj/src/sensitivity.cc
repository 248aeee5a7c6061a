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

#include "modqec/sensitivity.h"

#include <stdexcept>

namespace modqec {

namespace {

class Propagator {
   public:
    Propagator(const NoisyCircuit &circuit, const std::vector<std::vector<int>> &items)
        : xs_(circuit.num_qubits(), BitVec(items.size())),
          zs_(circuit.num_qubits(), BitVec(items.size())),
          nondet_(items.size()),
          by_measurement_(circuit.num_measurements()) {
        for (size_t k = 0; k < items.size(); k++) {
            for (int m : items[k]) {
                if (m < 0 || m >= circuit.num_measurements()) {
                    throw std::out_of_range("item references missing measurement " + std::to_string(m));
                }
                by_measurement_[m].push_back(static_cast<int>(k));
            }
        }
    }

    BitVec record_items(int m) const {
        BitVec out(nondet_.size());
        for (int k : by_measurement_[m]) {
            out.flip(k);
        }
        return out;
    }

    void cx(int c, int t) {
        xs_[t] ^= xs_[c];
        zs_[c] ^= zs_[t];
    }

    void cz(int a, int b) {
        zs_[a] ^= xs_[b];
        zs_[b] ^= xs_[a];
    }

    // CY maps X_c -> X_c Y_t, X_t -> Z_c X_t, Z_t -> Z_c Z_t; observables are pulled back by
    // the same rule.
    void cy(int c, int t) {
        zs_[c] ^= xs_[t];
        zs_[c] ^= zs_[t];
        xs_[t] ^= xs_[c];
        zs_[t] ^= xs_[c];
    }

    std::vector<BitVec> xs_;
    std::vector<BitVec> zs_;
    BitVec nondet_;
    std::vector<std::vector<int>> by_measurement_;
};

void mark(BitVec &nondet, const BitVec &v) {
    for (size_t k = 0; k < v.num_words(); k++) {
        nondet.data()[k] |= v.data()[k];
    }
}

}  // namespace

std::vector<std::vector<int>> detector_and_observable_items(const NoisyCircuit &circuit) {
    std::vector<std::vector<int>> items = circuit.detectors();
    items.insert(items.end(), circuit.observables().begin(), circuit.observables().end());
    return items;
}

SensitivityResult propagate_items(const NoisyCircuit &circuit, const std::vector<std::vector<int>> &items,
                                  const FaultVisitor &visit, const SensitivityOptions &opts) {
    Propagator st(circuit, items);
    auto &xs = st.xs_;
    auto &zs = st.zs_;
    BitVec &nondet = st.nondet_;
    int next_measurement = circuit.num_measurements();
    const auto &ops = circuit.ops();
    for (size_t oi = ops.size(); oi-- > 0;) {
        const CircuitOp &op = ops[oi];
        const auto &t = op.targets;
        switch (op.gate) {
            case CircuitGate::TICK:
                break;
            case CircuitGate::H:
                for (int q : t) {
                    std::swap(xs[q], zs[q]);
                }
                break;
            case CircuitGate::CX:
                for (size_t k = t.size(); k >= 2; k -= 2) {
                    st.cx(t[k - 2], t[k - 1]);
                }
                break;
            case CircuitGate::CY:
                for (size_t k = t.size(); k >= 2; k -= 2) {
                    st.cy(t[k - 2], t[k - 1]);
                }
                break;
            case CircuitGate::CZ:
                for (size_t k = t.size(); k >= 2; k -= 2) {
                    st.cz(t[k - 2], t[k - 1]);
                }
                break;
            case CircuitGate::R:
                for (int q : t) {
                    mark(nondet, xs[q]);
                    xs[q].clear();
                    zs[q].clear();
                }
                break;
            case CircuitGate::RX:
                for (int q : t) {
                    mark(nondet, zs[q]);
                    xs[q].clear();
                    zs[q].clear();
                }
                break;
            case CircuitGate::M:
            case CircuitGate::MX:
            case CircuitGate::MR:
            case CircuitGate::MRX: {
                bool x_basis = op.gate == CircuitGate::MX || op.gate == CircuitGate::MRX;
                bool reset = op.gate == CircuitGate::MR || op.gate == CircuitGate::MRX;
                next_measurement -= static_cast<int>(t.size());
                for (size_t k = t.size(); k-- > 0;) {
                    int q = t[k];
                    int m = next_measurement + static_cast<int>(k);
                    BitVec rec = st.record_items(m);
                    if (visit && op.arg > 0) {
                        visit(op.arg, rec);
                    }
                    BitVec &flip_side = x_basis ? zs[q] : xs[q];
                    BitVec &keep_side = x_basis ? xs[q] : zs[q];
                    if (reset) {
                        mark(nondet, flip_side);
                        xs[q].clear();
                        zs[q].clear();
                    }
                    mark(nondet, flip_side);
                    keep_side ^= rec;
                }
                break;
            }
            case CircuitGate::X_ERROR:
                if (visit) {
                    for (int q : t) {
                        visit(op.arg, zs[q]);
                    }
                }
                break;
            case CircuitGate::Z_ERROR:
                if (visit) {
                    for (int q : t) {
                        visit(op.arg, xs[q]);
                    }
                }
                break;
            case CircuitGate::DEPOLARIZE1:
                if (visit) {
                    double p = op.arg / 3;
                    for (int q : t) {
                        visit(p, zs[q]);
                        visit(p, xs[q]);
                        visit(p, xs[q] ^ zs[q]);
                    }
                }
                break;
            case CircuitGate::DEPOLARIZE2:
                if (visit) {
                    double p = op.arg / 15;
                    for (size_t k = 0; k + 1 < t.size(); k += 2) {
                        int a = t[k];
                        int b = t[k + 1];
                        BitVec sig_a[4] = {BitVec(items.size()), zs[a], xs[a] ^ zs[a], xs[a]};
                        BitVec sig_b[4] = {BitVec(items.size()), zs[b], xs[b] ^ zs[b], xs[b]};
                        for (int pa = 0; pa < 4; pa++) {
                            for (int pb = 0; pb < 4; pb++) {
                                if (pa == 0 && pb == 0) {
                                    continue;
                                }
                                visit(p, sig_a[pa] ^ sig_b[pb]);
                            }
                        }
                    }
                }
                break;
        }
    }
    if (next_measurement != 0) {
        throw std::logic_error("measurement count mismatch in backward pass");
    }
    SensitivityResult out;
    out.start_operators.assign(items.size(), PauliOperator(circuit.num_qubits()));
    for (int q = 0; q < circuit.num_qubits(); q++) {
        for (size_t k : xs[q].ones()) {
            out.start_operators[k].xs().set(q, true);
        }
        for (size_t k : zs[q].ones()) {
            out.start_operators[k].zs().set(q, true);
        }
        if (opts.include_initial_state) {
            mark(nondet, xs[q]);
        }
    }
    out.nondeterministic = nondet;
    return out;
}

}  // namespace modqec
