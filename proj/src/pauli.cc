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

#include "modqec/pauli.h"

#include <stdexcept>

namespace modqec {

PauliOperator PauliOperator::from_string(const std::string &text) {
    PauliOperator out(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        out.set(q, text[q] == '_' ? 'I' : text[q]);
    }
    return out;
}

char PauliOperator::get(size_t q) const {
    bool x = xs_.get(q);
    bool z = zs_.get(q);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

void PauliOperator::set(size_t q, char pauli) {
    if (q >= num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside a " +
                                std::to_string(num_qubits()) + "-qubit Pauli");
    }
    switch (pauli) {
        case 'I':
            xs_.set(q, false);
            zs_.set(q, false);
            break;
        case 'X':
            xs_.set(q, true);
            zs_.set(q, false);
            break;
        case 'Y':
            xs_.set(q, true);
            zs_.set(q, true);
            break;
        case 'Z':
            xs_.set(q, false);
            zs_.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli '") + pauli + "'");
    }
}

std::vector<size_t> PauliOperator::support() const {
    BitVec any = xs_;
    for (size_t k = 0; k < any.num_words(); k++) {
        any.data()[k] |= zs_.data()[k];
    }
    return any.ones();
}

size_t PauliOperator::weight() const { return support().size(); }

bool PauliOperator::commutes(const PauliOperator &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    return xs_.dot(other.zs_) == zs_.dot(other.xs_);
}

BitVec PauliOperator::symplectic() const {
    size_t n = num_qubits();
    BitVec out(2 * n);
    for (size_t q : xs_.ones()) {
        out.set(q, true);
    }
    for (size_t q : zs_.ones()) {
        out.set(n + q, true);
    }
    return out;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    xs_ ^= other.xs_;
    zs_ ^= other.zs_;
    return *this;
}

std::string PauliOperator::str() const {
    std::string s(num_qubits(), '_');
    for (size_t q = 0; q < num_qubits(); q++) {
        char c = get(q);
        if (c != 'I') {
            s[q] = c;
        }
    }
    return s;
}

}  // namespace modqec
