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

#ifndef MODQEC_GF2_H
#define MODQEC_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modqec {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are kept zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    static BitVec from_string(const std::string &bits);

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }

    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    bool operator==(const BitVec &other) const = default;
    auto operator<=>(const BitVec &other) const = default;

    bool any() const;
    bool none() const { return !any(); }
    size_t popcount() const;
    /// Index of the lowest set bit, or size() when empty.
    size_t first_one() const;
    bool dot(const BitVec &other) const;
    void clear();
    std::vector<size_t> ones() const;
    std::string str() const;

    uint64_t *data() { return words_.data(); }
    const uint64_t *data() const { return words_.data(); }
    const std::vector<uint64_t> &words() const { return words_; }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense GF(2) matrix stored as bit-packed rows.
class GF2Matrix {
   public:
    GF2Matrix() = default;
    GF2Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    static GF2Matrix identity(size_t n);
    static GF2Matrix from_rows(const std::vector<std::string> &rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool get(size_t r, size_t c) const { return data_[r].get(c); }
    void set(size_t r, size_t c, bool v) { data_[r].set(c, v); }
    void flip(size_t r, size_t c) { data_[r].flip(c); }
    const BitVec &row(size_t r) const { return data_[r]; }
    BitVec &row(size_t r) { return data_[r]; }
    BitVec col(size_t c) const;

    GF2Matrix transpose() const;
    GF2Matrix &operator+=(const GF2Matrix &other);
    friend GF2Matrix operator+(GF2Matrix a, const GF2Matrix &b) { return a += b; }
    friend GF2Matrix operator*(const GF2Matrix &a, const GF2Matrix &b);
    BitVec apply(const BitVec &x) const;
    bool operator==(const GF2Matrix &other) const = default;

    bool is_zero() const;
    /// [this | other], row counts must agree.
    GF2Matrix hstack(const GF2Matrix &other) const;
    /// [this ; other], column counts must agree.
    GF2Matrix vstack(const GF2Matrix &other) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BitVec> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
    GF2Matrix reduced;
    std::vector<size_t> pivot_cols;
};

RowEchelon row_reduce(GF2Matrix m);
size_t gf2_rank(const GF2Matrix &m);

/// Returns x with m * x = b, or nullopt when b is outside the column space.
/// Free variables are set to zero, so b = 0 always yields x = 0.
std::optional<BitVec> gf2_solve(const GF2Matrix &m, const BitVec &b);

/// Basis of {x : m * x = 0}, one vector per free column of the reduced form.
std::vector<BitVec> kernel_basis(const GF2Matrix &m);

/// Incremental echelon basis over GF(2) keyed by lowest set bit. Each stored vector
/// remembers which inserted vectors it was built from.
class IncrementalBasis {
   public:
    IncrementalBasis(size_t vec_bits, size_t max_members);

    /// Reduces v in place; returns true if it became zero.
    bool reduce(BitVec &v, BitVec *combo = nullptr) const;
    /// Inserts v with identity `member`; returns false if v was dependent.
    bool insert(BitVec v, size_t member);
    size_t rank() const { return basis_.size(); }

   private:
    size_t vec_bits_;
    size_t max_members_;
    std::vector<BitVec> basis_;
    std::vector<BitVec> combos_;
    std::vector<int> lead_index_;
};

}  // namespace modqec

#endif
