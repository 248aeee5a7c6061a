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

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modqec {

static int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

RingParams::RingParams(int ell, int m) : ell(ell), m(m) {
    if (ell < 1 || m < 1) {
        throw std::invalid_argument("ring periods must be positive, got ell=" + std::to_string(ell) +
                                    " m=" + std::to_string(m));
    }
}

Monomial reduce_monomial(const RingParams &params, int i, int j) {
    return Monomial{mod(i, params.ell), mod(j, params.m)};
}

BivariatePolynomial::BivariatePolynomial(RingParams params, const std::vector<std::pair<int, int>> &terms)
    : params_(params) {
    for (auto [i, j] : terms) {
        toggle(i, j);
    }
}

void BivariatePolynomial::toggle(int i, int j) {
    Monomial mono = reduce_monomial(params_, i, j);
    auto it = std::find(terms_.begin(), terms_.end(), mono);
    if (it == terms_.end()) {
        terms_.push_back(mono);
    } else {
        terms_.erase(it);
    }
}

bool BivariatePolynomial::contains(const Monomial &mono) const {
    return std::find(terms_.begin(), terms_.end(), mono) != terms_.end();
}

BivariatePolynomial &BivariatePolynomial::operator+=(const BivariatePolynomial &other) {
    if (!(params_ == other.params_)) {
        throw std::invalid_argument("polynomials over different rings");
    }
    for (const auto &t : other.terms_) {
        toggle(t.i, t.j);
    }
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b) {
    if (!(a.params_ == b.params_)) {
        throw std::invalid_argument("polynomials over different rings");
    }
    BivariatePolynomial out(a.params_);
    for (const auto &s : a.terms_) {
        for (const auto &t : b.terms_) {
            out.toggle(s.i + t.i, s.j + t.j);
        }
    }
    return out;
}

bool BivariatePolynomial::operator==(const BivariatePolynomial &other) const {
    if (!(params_ == other.params_) || terms_.size() != other.terms_.size()) {
        return false;
    }
    for (const auto &t : terms_) {
        if (!other.contains(t)) {
            return false;
        }
    }
    return true;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::stringstream ss;
    for (size_t k = 0; k < terms_.size(); k++) {
        if (k) {
            ss << " + ";
        }
        const auto &t = terms_[k];
        if (t.i == 0 && t.j == 0) {
            ss << "1";
            continue;
        }
        if (t.i) {
            ss << "x^" << t.i;
        }
        if (t.j) {
            ss << "y^" << t.j;
        }
    }
    return ss.str();
}

GF2Matrix monomial_matrix(const RingParams &params, Monomial mono) {
    int n = params.size();
    GF2Matrix out(n, n);
    for (int v = 0; v < params.ell; v++) {
        for (int w = 0; w < params.m; w++) {
            int col = mod(v + mono.i, params.ell) * params.m + mod(w + mono.j, params.m);
            out.set(v * params.m + w, col, true);
        }
    }
    return out;
}

GF2Matrix poly_to_matrix(const BivariatePolynomial &p) {
    const auto &params = p.params();
    GF2Matrix out(params.size(), params.size());
    for (const auto &t : p.terms()) {
        out += monomial_matrix(params, t);
    }
    return out;
}

BivariatePolynomial transpose_poly(const BivariatePolynomial &p) {
    BivariatePolynomial out(p.params());
    for (const auto &t : p.terms()) {
        out.toggle(-t.i, -t.j);
    }
    return out;
}

ExponentSets exponent_sets(const BivariatePolynomial &p) {
    ExponentSets out;
    for (const auto &t : p.terms()) {
        out.I.insert(t.i);
        out.J.insert(t.j);
    }
    return out;
}

}  // namespace modqec
