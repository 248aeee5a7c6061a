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

#ifndef MODQEC_PAULI_H
#define MODQEC_PAULI_H

#include <string>
#include <vector>

#include "modqec/gf2.h"

namespace modqec {

/// Unsigned N-qubit Pauli operator in symplectic form.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {}

    /// Parses strings like "XZ_IY" where '_' and 'I' are identity.
    static PauliOperator from_string(const std::string &text);

    size_t num_qubits() const { return xs_.size(); }
    /// One of 'I', 'X', 'Y', 'Z'.
    char get(size_t q) const;
    void set(size_t q, char pauli);

    const BitVec &xs() const { return xs_; }
    const BitVec &zs() const { return zs_; }
    BitVec &xs() { return xs_; }
    BitVec &zs() { return zs_; }

    std::vector<size_t> support() const;
    size_t weight() const;
    bool is_identity() const { return xs_.none() && zs_.none(); }
    bool commutes(const PauliOperator &other) const;
    /// [x | z] row of length 2N.
    BitVec symplectic() const;

    PauliOperator &operator*=(const PauliOperator &other);
    bool operator==(const PauliOperator &other) const = default;
    std::string str() const;

   private:
    BitVec xs_;
    BitVec zs_;
};

}  // namespace modqec

#endif
