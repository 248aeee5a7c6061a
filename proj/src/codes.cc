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

#include "modqec/codes.h"

#include <stdexcept>

namespace modqec {

Basis parse_basis(const std::string &name) {
    if (name == "X" || name == "x") {
        return Basis::X;
    }
    if (name == "Z" || name == "z") {
        return Basis::Z;
    }
    throw std::invalid_argument("unknown basis '" + name + "' (expected X or Z)");
}

const char *basis_name(Basis b) { return b == Basis::X ? "X" : "Z"; }

static GF2Matrix symplectic_matrix(size_t n, const std::vector<PauliOperator> &ops) {
    GF2Matrix m(ops.size(), 2 * n);
    for (size_t r = 0; r < ops.size(); r++) {
        m.row(r) = ops[r].symplectic();
    }
    return m;
}

StabilizerCode::StabilizerCode(size_t num_qubits, std::vector<PauliOperator> generators,
                               std::optional<int> known_distance)
    : num_qubits_(num_qubits), generators_(std::move(generators)), known_distance_(known_distance) {
    for (const auto &g : generators_) {
        if (g.num_qubits() != num_qubits_) {
            throw std::invalid_argument("generator size does not match code size");
        }
    }
    for (size_t a = 0; a < generators_.size(); a++) {
        for (size_t b = a + 1; b < generators_.size(); b++) {
            if (!generators_[a].commutes(generators_[b])) {
                throw std::invalid_argument("generators " + std::to_string(a) + " and " + std::to_string(b) +
                                            " anticommute");
            }
        }
    }
    k_ = num_qubits_ - gf2_rank(symplectic_matrix(num_qubits_, generators_));
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator &p) const {
    IncrementalBasis basis(2 * num_qubits_, 0);
    for (size_t r = 0; r < generators_.size(); r++) {
        basis.insert(generators_[r].symplectic(), r);
    }
    BitVec v = p.symplectic();
    return basis.reduce(v);
}

bool StabilizerCode::commutes_with_all(const PauliOperator &p) const {
    for (const auto &g : generators_) {
        if (!g.commutes(p)) {
            return false;
        }
    }
    return true;
}

BBCode build_bb_code(const RingParams &params, const BivariatePolynomial &A, const BivariatePolynomial &B,
                     std::optional<int> known_distance, const std::string &name) {
    if (!(A.params() == params) || !(B.params() == params)) {
        throw std::invalid_argument("polynomials do not match ring parameters");
    }
    if (A.empty() || B.empty()) {
        throw std::invalid_argument("BB code polynomials must be nonempty");
    }
    BBCode code;
    code.name = name;
    code.params = params;
    code.A = A;
    code.B = B;
    GF2Matrix a = poly_to_matrix(A);
    GF2Matrix b = poly_to_matrix(B);
    code.hx = a.hstack(b);
    code.hz = b.transpose().hstack(a.transpose());
    if (!(code.hx * code.hz.transpose()).is_zero()) {
        throw std::logic_error("H_X H_Z^T != 0");
    }
    code.n = 2 * params.size();
    code.k = code.n - static_cast<int>(gf2_rank(code.hx)) - static_cast<int>(gf2_rank(code.hz));
    code.omega = static_cast<int>(A.weight() + B.weight());
    code.known_distance = known_distance;
    code.label = "[[" + std::to_string(code.n) + "," + std::to_string(code.k) + "," +
                 (known_distance ? std::to_string(*known_distance) : std::string("?")) + "]]";
    return code;
}

int label_to_index(const QubitLabel &label, const RingParams &params) {
    if (label.v < 0 || label.v >= params.ell || label.w < 0 || label.w >= params.m) {
        throw std::out_of_range("label (" + std::to_string(label.v) + "," + std::to_string(label.w) +
                                ") outside the ring");
    }
    int block = (label.u == LabelKind::data_right || label.u == LabelKind::z_check) ? 1 : 0;
    return block * params.size() + label.v * params.m + label.w;
}

QubitLabel index_to_label(int index, const RingParams &params, bool ancilla) {
    if (index < 0 || index >= 2 * params.size()) {
        throw std::out_of_range("qubit index " + std::to_string(index) + " out of range");
    }
    int block = index / params.size();
    int rest = index % params.size();
    QubitLabel out;
    if (ancilla) {
        out.u = block ? LabelKind::z_check : LabelKind::x_check;
    } else {
        out.u = block ? LabelKind::data_right : LabelKind::data_left;
    }
    out.v = rest / params.m;
    out.w = rest % params.m;
    return out;
}

StabilizerCode stabilizer_generators(const BBCode &code) {
    std::vector<PauliOperator> gens;
    for (size_t r = 0; r < code.hx.rows(); r++) {
        PauliOperator p(code.n);
        p.xs() = code.hx.row(r);
        gens.push_back(std::move(p));
    }
    for (size_t r = 0; r < code.hz.rows(); r++) {
        PauliOperator p(code.n);
        p.zs() = code.hz.row(r);
        gens.push_back(std::move(p));
    }
    return StabilizerCode(code.n, std::move(gens), code.known_distance);
}

std::vector<PauliOperator> logical_observables(const BBCode &code, Basis basis) {
    // Z logicals: ker(H_X) modulo rowspace(H_Z); X logicals dually.
    const GF2Matrix &commute_with = basis == Basis::Z ? code.hx : code.hz;
    const GF2Matrix &same_type = basis == Basis::Z ? code.hz : code.hx;
    IncrementalBasis span(code.n, 0);
    for (size_t r = 0; r < same_type.rows(); r++) {
        span.insert(same_type.row(r), r);
    }
    std::vector<PauliOperator> out;
    for (auto &v : kernel_basis(commute_with)) {
        BitVec probe = v;
        if (span.insert(probe, 0)) {
            PauliOperator p(code.n);
            (basis == Basis::Z ? p.zs() : p.xs()) = v;
            out.push_back(std::move(p));
        }
        if (static_cast<int>(out.size()) == code.k) {
            break;
        }
    }
    if (static_cast<int>(out.size()) != code.k) {
        throw std::logic_error("found " + std::to_string(out.size()) + " logicals, expected " +
                               std::to_string(code.k));
    }
    return out;
}

int brute_force_distance(const StabilizerCode &code, DistanceKind kind) {
    size_t n = code.num_qubits();
    if (n > 20) {
        throw std::invalid_argument("brute_force_distance limited to 20 qubits, got " + std::to_string(n));
    }
    if (code.k() == 0) {
        throw std::invalid_argument("code has no logical qubits");
    }
    std::vector<char> letters;
    if (kind != DistanceKind::z_only) {
        letters.push_back('X');
    }
    if (kind == DistanceKind::any) {
        letters.push_back('Y');
    }
    if (kind != DistanceKind::x_only) {
        letters.push_back('Z');
    }
    for (size_t w = 1; w <= n; w++) {
        std::vector<size_t> pos(w);
        for (size_t k = 0; k < w; k++) {
            pos[k] = k;
        }
        while (true) {
            size_t combos = 1;
            for (size_t k = 0; k < w; k++) {
                combos *= letters.size();
            }
            for (size_t c = 0; c < combos; c++) {
                PauliOperator p(n);
                size_t rest = c;
                for (size_t k = 0; k < w; k++) {
                    p.set(pos[k], letters[rest % letters.size()]);
                    rest /= letters.size();
                }
                if (code.commutes_with_all(p) && !code.in_stabilizer_group(p)) {
                    return static_cast<int>(w);
                }
            }
            // Next combination of w positions.
            size_t k = w;
            while (k > 0 && pos[k - 1] == n - w + k - 1) {
                k--;
            }
            if (k == 0) {
                break;
            }
            pos[k - 1]++;
            for (size_t t = k; t < w; t++) {
                pos[t] = pos[t - 1] + 1;
            }
        }
    }
    throw std::logic_error("no logical operator found");
}

}  // namespace modqec
