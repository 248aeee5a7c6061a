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

#ifndef MODQEC_CODES_H
#define MODQEC_CODES_H

#include <optional>
#include <string>
#include <vector>

#include "modqec/gf2.h"
#include "modqec/pauli.h"
#include "modqec/polynomial.h"

namespace modqec {

enum class Basis { X, Z };

Basis parse_basis(const std::string &name);
const char *basis_name(Basis b);

class StabilizerCode {
   public:
    StabilizerCode() = default;
    /// Throws if generators do not commute or have mismatched sizes.
    StabilizerCode(size_t num_qubits, std::vector<PauliOperator> generators,
                   std::optional<int> known_distance = std::nullopt);

    size_t num_qubits() const { return num_qubits_; }
    const std::vector<PauliOperator> &generators() const { return generators_; }
    size_t k() const { return k_; }
    std::optional<int> known_distance() const { return known_distance_; }

    /// True if p lies in the span of the generators (signs ignored).
    bool in_stabilizer_group(const PauliOperator &p) const;
    bool commutes_with_all(const PauliOperator &p) const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliOperator> generators_;
    size_t k_ = 0;
    std::optional<int> known_distance_;
};

struct BBCode {
    std::string name;
    std::string label;
    RingParams params;
    BivariatePolynomial A;
    BivariatePolynomial B;
    GF2Matrix hx;
    GF2Matrix hz;
    int n = 0;
    int k = 0;
    int omega = 0;
    std::optional<int> known_distance;

    int half() const { return params.size(); }
};

BBCode build_bb_code(const RingParams &params, const BivariatePolynomial &A, const BivariatePolynomial &B,
                     std::optional<int> known_distance = std::nullopt, const std::string &name = "");

enum class LabelKind { data_left, data_right, x_check, z_check };

struct QubitLabel {
    LabelKind u = LabelKind::data_left;
    int v = 0;
    int w = 0;
    bool is_data() const { return u == LabelKind::data_left || u == LabelKind::data_right; }
    bool operator==(const QubitLabel &) const = default;
};

/// Data labels map to u*ell*m + v*m + w; check labels map into their own index space,
/// X block first then Z block.
int label_to_index(const QubitLabel &label, const RingParams &params);
QubitLabel index_to_label(int index, const RingParams &params, bool ancilla);

/// X generators for rows of H_X followed by Z generators for rows of H_Z.
StabilizerCode stabilizer_generators(const BBCode &code);

/// k independent logical operators of the given Pauli type.
std::vector<PauliOperator> logical_observables(const BBCode &code, Basis basis);

enum class DistanceKind { any, x_only, z_only };

/// Minimum weight of a logical operator by exhaustive search. Requires N <= 20 and k >= 1.
int brute_force_distance(const StabilizerCode &code, DistanceKind kind = DistanceKind::any);

}  // namespace modqec

#endif
