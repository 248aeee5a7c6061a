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

#ifndef MODQEC_TABLEAU_H
#define MODQEC_TABLEAU_H

#include <cstdint>
#include <random>
#include <vector>

#include "modqec/circuit.h"
#include "modqec/gf2.h"
#include "modqec/pauli.h"

namespace modqec {

/// Stabilizer tableau with destabilizers, starting in |0...0>.
class Tableau {
   public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const { return n_; }

    void h(size_t q);
    void s(size_t q);
    void x(size_t q);
    void cx(size_t c, size_t t);
    void cz(size_t a, size_t b);
    void cy(size_t c, size_t t);

    bool is_deterministic_z(size_t q) const;
    /// Measures Z on q. A random outcome takes the value `choice`.
    bool measure_z(size_t q, bool choice = false);
    bool measure_x(size_t q, bool choice = false);
    void reset_z(size_t q);
    void reset_x(size_t q);

    /// +1 or -1 if P or -P stabilizes the state, 0 otherwise. 'Y' means the Hermitian Y.
    int expectation(const PauliOperator &p) const;

   private:
    struct Row {
        BitVec x;
        BitVec z;
        bool r = false;
    };
    void rowsum(Row &h, const Row &i) const;

    size_t n_;
    std::vector<Row> rows_;
};

struct TableauRun {
    std::vector<uint8_t> measurements;
    /// Number of measurements whose outcome was random.
    int random_measurements = 0;
};

/// Runs the circuit without its noise. Random outcomes are drawn from rng, or set to 0
/// when rng is null.
TableauRun tableau_run(const NoisyCircuit &circuit, std::mt19937_64 *rng = nullptr);

struct TableauBranch {
    double probability = 0;
    std::vector<uint8_t> measurements;
    Tableau state{0};
};

/// Every outcome branch of the noiseless circuit. Throws past max_branches.
std::vector<TableauBranch> enumerate_branches(const NoisyCircuit &circuit, size_t max_branches = 1 << 12);

}  // namespace modqec

#endif
