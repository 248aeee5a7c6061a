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

#include "modqec/gf2.h"

#include <stdexcept>

namespace modqec {

BitVec BitVec::from_string(const std::string &bits) {
    BitVec out(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            out.set(k, true);
        } else if (bits[k] != '0' && bits[k] != '.' && bits[k] != '_') {
            throw std::invalid_argument("bad bit character in '" + bits + "'");
        }
    }
    return out;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch in xor");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch in and");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitVec::first_one() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return num_bits_;
}

bool BitVec::dot(const BitVec &other) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

void BitVec::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

GF2Matrix GF2Matrix::identity(size_t n) {
    GF2Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return GF2Matrix();
    }
    GF2Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != m.cols()) {
            throw std::invalid_argument("ragged matrix rows");
        }
        m.data_[r] = BitVec::from_string(rows[r]);
    }
    return m;
}

BitVec GF2Matrix::col(size_t c) const {
    BitVec out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (data_[r].get(c)) {
            out.set(r, true);
        }
    }
    return out;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : data_[r].ones()) {
            t.set(c, r, true);
        }
    }
    return t;
}

GF2Matrix &GF2Matrix::operator+=(const GF2Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in addition");
    }
    for (size_t r = 0; r < rows_; r++) {
        data_[r] ^= other.data_[r];
    }
    return *this;
}

GF2Matrix operator*(const GF2Matrix &a, const GF2Matrix &b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    GF2Matrix out(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; r++) {
        for (size_t k : a.data_[r].ones()) {
            out.data_[r] ^= b.data_[k];
        }
    }
    return out;
}

BitVec GF2Matrix::apply(const BitVec &x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("vector length does not match matrix columns");
    }
    BitVec out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (data_[r].dot(x)) {
            out.set(r, true);
        }
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    for (const auto &r : data_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

GF2Matrix GF2Matrix::hstack(const GF2Matrix &other) const {
    if (rows_ != other.rows_) {
        throw std::invalid_argument("hstack row mismatch");
    }
    GF2Matrix out(rows_, cols_ + other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : data_[r].ones()) {
            out.set(r, c, true);
        }
        for (size_t c : other.data_[r].ones()) {
            out.set(r, cols_ + c, true);
        }
    }
    return out;
}

GF2Matrix GF2Matrix::vstack(const GF2Matrix &other) const {
    if (cols_ != other.cols_) {
        throw std::invalid_argument("vstack column mismatch");
    }
    GF2Matrix out(rows_ + other.rows_, cols_);
    for (size_t r = 0; r < rows_; r++) {
        out.data_[r] = data_[r];
    }
    for (size_t r = 0; r < other.rows_; r++) {
        out.data_[rows_ + r] = other.data_[r];
    }
    return out;
}

RowEchelon row_reduce(GF2Matrix m) {
    RowEchelon out;
    size_t pivot_row = 0;
    for (size_t c = 0; c < m.cols() && pivot_row < m.rows(); c++) {
        size_t found = m.rows();
        for (size_t r = pivot_row; r < m.rows(); r++) {
            if (m.get(r, c)) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        std::swap(m.row(found), m.row(pivot_row));
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != pivot_row && m.get(r, c)) {
                m.row(r) ^= m.row(pivot_row);
            }
        }
        out.pivot_cols.push_back(c);
        pivot_row++;
    }
    out.reduced = std::move(m);
    return out;
}

size_t gf2_rank(const GF2Matrix &m) {
    IncrementalBasis basis(m.cols(), 0);
    for (size_t r = 0; r < m.rows(); r++) {
        basis.insert(m.row(r), r);
    }
    return basis.rank();
}

std::optional<BitVec> gf2_solve(const GF2Matrix &m, const BitVec &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("gf2_solve: rhs length " + std::to_string(b.size()) +
                                    " does not match " + std::to_string(m.rows()) + " rows");
    }
    GF2Matrix aug = m.hstack(GF2Matrix(m.rows(), 1));
    for (size_t r = 0; r < m.rows(); r++) {
        aug.set(r, m.cols(), b.get(r));
    }
    RowEchelon ech = row_reduce(std::move(aug));
    BitVec x(m.cols());
    for (size_t k = 0; k < ech.pivot_cols.size(); k++) {
        size_t c = ech.pivot_cols[k];
        if (c == m.cols()) {
            return std::nullopt;
        }
        x.set(c, ech.reduced.get(k, m.cols()));
    }
    return x;
}

std::vector<BitVec> kernel_basis(const GF2Matrix &m) {
    RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : ech.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<BitVec> out;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(m.cols());
        v.set(f, true);
        for (size_t k = 0; k < ech.pivot_cols.size(); k++) {
            if (ech.reduced.get(k, f)) {
                v.set(ech.pivot_cols[k], true);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

IncrementalBasis::IncrementalBasis(size_t vec_bits, size_t max_members)
    : vec_bits_(vec_bits), max_members_(max_members), lead_index_(vec_bits, -1) {}

bool IncrementalBasis::reduce(BitVec &v, BitVec *combo) const {
    while (true) {
        size_t b = v.first_one();
        if (b >= vec_bits_) {
            return true;
        }
        int k = lead_index_[b];
        if (k < 0) {
            return false;
        }
        v ^= basis_[k];
        if (combo != nullptr) {
            *combo ^= combos_[k];
        }
    }
}

bool IncrementalBasis::insert(BitVec v, size_t member) {
    BitVec combo(max_members_);
    if (reduce(v, max_members_ ? &combo : nullptr)) {
        return false;
    }
    if (max_members_) {
        combo.flip(member);
    }
    lead_index_[v.first_one()] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    return true;
}

}  // namespace modqec
