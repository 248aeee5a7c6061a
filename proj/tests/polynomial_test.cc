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

#include "modqec/polynomial.h"

#include <random>

#include "gtest/gtest.h"

using namespace modqec;

static GF2Matrix shift_matrix(int n) {
    GF2Matrix s(n, n);
    for (int r = 0; r < n; r++) {
        s.set(r, (r + 1) % n, true);
    }
    return s;
}

static GF2Matrix power(const GF2Matrix &m, int e) {
    GF2Matrix out = GF2Matrix::identity(m.rows());
    for (int k = 0; k < e; k++) {
        out = out * m;
    }
    return out;
}

static GF2Matrix kron(const GF2Matrix &a, const GF2Matrix &b) {
    GF2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (!a.get(i, j)) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    out.set(i * b.rows() + k, j * b.cols() + l, b.get(k, l));
                }
            }
        }
    }
    return out;
}

static BivariatePolynomial random_poly(std::mt19937_64 &rng, RingParams params, int terms) {
    BivariatePolynomial p(params);
    for (int t = 0; t < terms; t++) {
        p.toggle(static_cast<int>(rng() % 50) - 25, static_cast<int>(rng() % 50) - 25);
    }
    return p;
}

TEST(Polynomial, toggle_reduces_and_cancels) {
    RingParams params(6, 6);
    BivariatePolynomial p(params, {{3, 0}, {0, 1}, {0, 2}});
    EXPECT_EQ(p.weight(), 3u);
    p.toggle(9, 0);
    EXPECT_EQ(p.weight(), 2u);
    p.toggle(-1, 7);
    EXPECT_TRUE(p.contains(Monomial{5, 1}));
    EXPECT_EQ(p.str(), "y^1 + y^2 + x^5y^1");
    EXPECT_EQ(BivariatePolynomial(params).str(), "0");
}

TEST(Polynomial, ring_params_must_be_positive) {
    EXPECT_THROW(RingParams(0, 3), std::invalid_argument);
    EXPECT_THROW(RingParams(3, -1), std::invalid_argument);
}

TEST(Polynomial, equality_ignores_term_order) {
    RingParams params(4, 5);
    EXPECT_EQ(BivariatePolynomial(params, {{1, 0}, {0, 2}}), BivariatePolynomial(params, {{0, 2}, {1, 0}}));
    EXPECT_FALSE(BivariatePolynomial(params, {{1, 0}}) == BivariatePolynomial(RingParams(5, 4), {{1, 0}}));
}

TEST(Polynomial, monomial_matrix_is_kronecker_of_shifts) {
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{6, 6}, {15, 3}, {4, 5}, {1, 3}}) {
        RingParams params(ell, m);
        for (int i = 0; i < ell; i++) {
            for (int j = 0; j < m; j++) {
                GF2Matrix expect = kron(power(shift_matrix(ell), i), power(shift_matrix(m), j));
                EXPECT_EQ(monomial_matrix(params, Monomial{i, j}), expect) << ell << "x" << m << " " << i << "," << j;
            }
        }
    }
}

TEST(Polynomial, matrix_map_is_ring_homomorphism) {
    std::mt19937_64 rng(3);
    RingParams params(4, 5);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_poly(rng, params, 4);
        auto b = random_poly(rng, params, 3);
        EXPECT_EQ(poly_to_matrix(a * b), poly_to_matrix(a) * poly_to_matrix(b));
        EXPECT_EQ(poly_to_matrix(a + b), poly_to_matrix(a) + poly_to_matrix(b));
        EXPECT_EQ(poly_to_matrix(a) * poly_to_matrix(b), poly_to_matrix(b) * poly_to_matrix(a));
    }
}

TEST(Polynomial, transpose_matches_matrix_transpose) {
    std::mt19937_64 rng(5);
    RingParams params(6, 3);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_poly(rng, params, 5);
        EXPECT_EQ(poly_to_matrix(transpose_poly(a)), poly_to_matrix(a).transpose());
    }
    BivariatePolynomial p(params, {{1, 0}, {0, 2}});
    EXPECT_EQ(transpose_poly(p), BivariatePolynomial(params, {{5, 0}, {0, 1}}));
}

TEST(Polynomial, exponent_sets) {
    RingParams params(6, 6);
    auto sets = exponent_sets(BivariatePolynomial(params, {{3, 0}, {0, 1}, {0, 2}}));
    EXPECT_EQ(sets.I, (std::set<int>{0, 3}));
    EXPECT_EQ(sets.J, (std::set<int>{0, 1, 2}));
}
