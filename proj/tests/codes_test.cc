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

#include "gtest/gtest.h"
#include "modqec/catalog.h"

using namespace modqec;

// Rank over GF(2) with plain integer rows, independent of the library's elimination.
static int int_rank(std::vector<std::vector<int>> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); c++) {
        int pivot = -1;
        for (size_t r = rank; r < rows.size(); r++) {
            if (rows[r][c]) {
                pivot = static_cast<int>(r);
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (static_cast<int>(r) != rank && rows[r][c]) {
                for (size_t k = 0; k < cols; k++) {
                    rows[r][k] ^= rows[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

static std::vector<std::vector<int>> to_ints(const GF2Matrix &m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m.get(r, c);
        }
    }
    return out;
}

// Check matrix entry straight from the polynomial: row (v,w) touches column (v+i, w+j).
static std::vector<std::vector<int>> circulant(const BivariatePolynomial &p, bool transpose) {
    int ell = p.params().ell;
    int m = p.params().m;
    std::vector<std::vector<int>> out(ell * m, std::vector<int>(ell * m, 0));
    for (const auto &t : p.terms()) {
        for (int v = 0; v < ell; v++) {
            for (int w = 0; w < m; w++) {
                int r = v * m + w;
                int c = ((v + t.i) % ell) * m + (w + t.j) % m;
                (transpose ? out[c][r] : out[r][c]) ^= 1;
            }
        }
    }
    return out;
}

TEST(Catalog, code_parameters) {
    auto codes = load_catalog();
    ASSERT_EQ(codes.size(), 4u);
    std::vector<std::string> names{"bb72", "bb90", "bb108", "bb144"};
    std::vector<int> ns{72, 90, 108, 144};
    std::vector<int> ks{12, 8, 8, 12};
    std::vector<int> ds{6, 10, 10, 12};
    for (size_t c = 0; c < 4; c++) {
        const auto &code = codes[c];
        EXPECT_EQ(code.name, names[c]);
        EXPECT_EQ(code.n, ns[c]);
        EXPECT_EQ(code.k, ks[c]);
        EXPECT_EQ(code.omega, 6);
        EXPECT_EQ(code.known_distance, ds[c]);
        EXPECT_TRUE((code.hx * code.hz.transpose()).is_zero());

        auto a = circulant(code.A, false);
        auto b = circulant(code.B, false);
        auto at = circulant(code.A, true);
        auto bt = circulant(code.B, true);
        std::vector<std::vector<int>> hx, hz;
        for (int r = 0; r < code.half(); r++) {
            std::vector<int> row = a[r];
            row.insert(row.end(), b[r].begin(), b[r].end());
            hx.push_back(row);
            row = bt[r];
            row.insert(row.end(), at[r].begin(), at[r].end());
            hz.push_back(row);
        }
        EXPECT_EQ(to_ints(code.hx), hx);
        EXPECT_EQ(to_ints(code.hz), hz);
        EXPECT_EQ(code.n - int_rank(hx) - int_rank(hz), ks[c]);
        for (const auto &row : hx) {
            int weight = 0;
            for (int v : row) {
                weight += v;
            }
            EXPECT_EQ(weight, 6);
        }
    }
    EXPECT_EQ(find_code("bb144").label, "[[144,12,12]]");
    EXPECT_THROW(find_code("bb999"), std::exception);
}

TEST(Catalog, rejects_wrong_records) {
    EXPECT_THROW(load_catalog("/nonexistent/catalog.json"), std::exception);
}

TEST(Codes, toric_codes_by_exhaustive_distance) {
    for (auto [L, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
        RingParams params(L, L);
        BBCode code = build_bb_code(params, BivariatePolynomial(params, {{0, 0}, {1, 0}}),
                                    BivariatePolynomial(params, {{0, 0}, {0, 1}}));
        EXPECT_EQ(code.n, 2 * L * L);
        EXPECT_EQ(code.k, 2);
        auto stab = stabilizer_generators(code);
        EXPECT_EQ(stab.k(), 2u);
        EXPECT_EQ(brute_force_distance(stab), d);
        EXPECT_EQ(brute_force_distance(stab, DistanceKind::x_only), d);
        EXPECT_EQ(brute_force_distance(stab, DistanceKind::z_only), d);
    }
}

TEST(Codes, five_qubit_code) {
    std::vector<PauliOperator> gens;
    for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
        gens.push_back(PauliOperator::from_string(s));
    }
    StabilizerCode code(5, gens);
    EXPECT_EQ(code.k(), 1u);
    EXPECT_EQ(brute_force_distance(code), 3);
    EXPECT_TRUE(code.in_stabilizer_group(PauliOperator::from_string("ZXIXZ")));
    EXPECT_FALSE(code.in_stabilizer_group(PauliOperator::from_string("XXXXX")));
    EXPECT_TRUE(code.commutes_with_all(PauliOperator::from_string("XXXXX")));
    EXPECT_THROW(StabilizerCode(2, {PauliOperator::from_string("XI"), PauliOperator::from_string("ZI")}),
                 std::invalid_argument);
}

TEST(Codes, logical_observables_are_independent_logicals) {
    BBCode code = find_code("bb72");
    StabilizerCode stab = stabilizer_generators(code);
    for (Basis basis : {Basis::X, Basis::Z}) {
        auto logicals = logical_observables(code, basis);
        ASSERT_EQ(static_cast<int>(logicals.size()), code.k);
        GF2Matrix m(logicals.size() + code.hz.rows() + code.hx.rows(), 2 * code.n);
        size_t r = 0;
        for (const auto &p : logicals) {
            EXPECT_TRUE(stab.commutes_with_all(p));
            EXPECT_FALSE(stab.in_stabilizer_group(p));
            EXPECT_TRUE(basis == Basis::Z ? p.xs().none() : p.zs().none());
            m.row(r++) = p.symplectic();
        }
        for (const auto &g : stab.generators()) {
            m.row(r++) = g.symplectic();
        }
        auto ints = to_ints(m);
        // Logicals add k dimensions on top of the stabilizer rank.
        std::vector<std::vector<int>> gens_only(ints.begin() + code.k, ints.end());
        EXPECT_EQ(int_rank(ints), int_rank(gens_only) + code.k);
    }
}

TEST(Codes, label_round_trip) {
    RingParams params(6, 6);
    for (int index = 0; index < 72; index++) {
        for (bool ancilla : {false, true}) {
            QubitLabel label = index_to_label(index, params, ancilla);
            EXPECT_EQ(label.is_data(), !ancilla);
            EXPECT_EQ(label_to_index(label, params), index);
        }
    }
    EXPECT_EQ(label_to_index(QubitLabel{LabelKind::data_right, 2, 3}, params), 36 + 15);
    EXPECT_THROW(label_to_index(QubitLabel{LabelKind::x_check, 6, 0}, params), std::out_of_range);
    EXPECT_THROW(index_to_label(72, params, false), std::out_of_range);
}

TEST(Codes, basis_names) {
    EXPECT_EQ(parse_basis("x"), Basis::X);
    EXPECT_EQ(std::string(basis_name(parse_basis("Z"))), "Z");
    EXPECT_THROW(parse_basis("Y"), std::invalid_argument);
}
