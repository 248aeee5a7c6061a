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

#ifndef MODQEC_POLYNOMIAL_H
#define MODQEC_POLYNOMIAL_H

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modqec/gf2.h"

namespace modqec {

/// Periods of x and y in F2[x,y]/(x^ell - 1, y^m - 1).
struct RingParams {
    int ell = 1;
    int m = 1;

    RingParams() = default;
    RingParams(int ell, int m);
    int size() const { return ell * m; }
    bool operator==(const RingParams &) const = default;
};

struct Monomial {
    int i = 0;
    int j = 0;
    auto operator<=>(const Monomial &) const = default;
};

/// GF(2) polynomial in two cyclic variables. Terms keep insertion order; adding an
/// existing term removes it.
class BivariatePolynomial {
   public:
    BivariatePolynomial() = default;
    explicit BivariatePolynomial(RingParams params) : params_(params) {}
    BivariatePolynomial(RingParams params, const std::vector<std::pair<int, int>> &terms);

    const RingParams &params() const { return params_; }
    const std::vector<Monomial> &terms() const { return terms_; }
    size_t weight() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Toggles x^i y^j, exponents reduced modulo the ring periods.
    void toggle(int i, int j);
    bool contains(const Monomial &mono) const;

    BivariatePolynomial &operator+=(const BivariatePolynomial &other);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial &b) {
        return a += b;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b);
    /// Equality as term sets.
    bool operator==(const BivariatePolynomial &other) const;

    std::string str() const;

   private:
    RingParams params_;
    std::vector<Monomial> terms_;
};

Monomial reduce_monomial(const RingParams &params, int i, int j);

/// S_ell^i (x) S_m^j, rows and columns indexed by v*m + w.
GF2Matrix monomial_matrix(const RingParams &params, Monomial mono);
GF2Matrix poly_to_matrix(const BivariatePolynomial &p);
BivariatePolynomial transpose_poly(const BivariatePolynomial &p);

struct ExponentSets {
    std::set<int> I;
    std::set<int> J;
};
ExponentSets exponent_sets(const BivariatePolynomial &p);

}  // namespace modqec

#endif
