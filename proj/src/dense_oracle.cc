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

#include "modqec/dense_oracle.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace modqec {

namespace {

using cd = std::complex<double>;

constexpr double kDropBelow = 1e-14;

// P |b> = phase(b) |b ^ xmask>.
cd pauli_phase(uint64_t b, uint64_t xmask, uint64_t zmask) {
    static const cd ipow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    int k = std::popcount(xmask & zmask) + 2 * std::popcount(b & zmask);
    return ipow[k & 3];
}

void masks(const PauliOperator &p, uint64_t &xmask, uint64_t &zmask) {
    xmask = 0;
    zmask = 0;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        xmask |= uint64_t{p.xs().get(q)} << q;
        zmask |= uint64_t{p.zs().get(q)} << q;
    }
}

void hadamard(StateVector &psi, int q) {
    const double s = 1 / std::sqrt(2.0);
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t b = 0; b < psi.size(); b++) {
        if (b & bit) {
            continue;
        }
        cd a0 = psi[b];
        cd a1 = psi[b | bit];
        psi[b] = s * (a0 + a1);
        psi[b | bit] = s * (a0 - a1);
    }
}

void recurse(const std::vector<PauliOperator> &paulis, size_t t, int nq, const StateVector &data, double prob,
             std::string &outcome, std::map<std::string, OracleOutcome> &out) {
    if (t == paulis.size()) {
        out[outcome] = OracleOutcome{prob, data};
        return;
    }
    uint64_t xmask, zmask;
    masks(paulis[t], xmask, zmask);
    int anc = nq;
    uint64_t abit = uint64_t{1} << anc;
    // ancilla starts in |0>; H; controlled-P; H; measure Z
    StateVector psi(size_t{1} << (nq + 1), cd(0, 0));
    for (uint64_t b = 0; b < data.size(); b++) {
        psi[b] = data[b];
    }
    hadamard(psi, anc);
    StateVector next(psi.size(), cd(0, 0));
    for (uint64_t b = 0; b < psi.size(); b++) {
        if (b & abit) {
            uint64_t d = b & (abit - 1);
            next[(d ^ xmask) | abit] += pauli_phase(d, xmask, zmask) * psi[b];
        } else {
            next[b] += psi[b];
        }
    }
    hadamard(next, anc);
    for (int m = 0; m < 2; m++) {
        StateVector branch(data.size());
        double norm = 0;
        for (uint64_t d = 0; d < data.size(); d++) {
            branch[d] = next[d | (m ? abit : 0)];
            norm += std::norm(branch[d]);
        }
        if (norm < kDropBelow) {
            continue;
        }
        double scale = 1 / std::sqrt(norm);
        for (auto &a : branch) {
            a *= scale;
        }
        outcome.push_back(m ? '1' : '0');
        recurse(paulis, t + 1, nq, branch, prob * norm, outcome, out);
        outcome.pop_back();
    }
}

}  // namespace

std::map<std::string, OracleOutcome> dense_sequential_oracle(const std::vector<PauliOperator> &paulis) {
    if (paulis.empty()) {
        throw std::invalid_argument("oracle needs at least one operator");
    }
    size_t nq = paulis[0].num_qubits();
    if (nq == 0 || nq > 6 || paulis.size() > 6) {
        throw std::invalid_argument("dense oracle is limited to 6 qubits and 6 operators");
    }
    for (const auto &p : paulis) {
        if (p.num_qubits() != nq) {
            throw std::invalid_argument("operators act on different qubit counts");
        }
    }
    StateVector start(size_t{1} << nq, cd(0, 0));
    start[0] = 1;
    std::map<std::string, OracleOutcome> out;
    std::string outcome;
    recurse(paulis, 0, static_cast<int>(nq), start, 1.0, outcome, out);
    return out;
}

double pauli_expectation(const StateVector &psi, const PauliOperator &p) {
    uint64_t xmask, zmask;
    masks(p, xmask, zmask);
    cd acc(0, 0);
    for (uint64_t b = 0; b < psi.size(); b++) {
        acc += std::conj(psi[b ^ xmask]) * pauli_phase(b, xmask, zmask) * psi[b];
    }
    return acc.real();
}

}  // namespace modqec
