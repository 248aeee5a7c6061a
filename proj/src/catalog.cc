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

#include "modqec/catalog.h"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace modqec {

std::string default_catalog_path() { return std::string(MODQEC_DATA_DIR) + "/catalog.json"; }

static BivariatePolynomial read_poly(const RingParams &params, const nlohmann::json &terms) {
    BivariatePolynomial p(params);
    for (const auto &t : terms) {
        if (!t.is_array() || t.size() != 2) {
            throw std::invalid_argument("polynomial term must be an [i, j] pair");
        }
        p.toggle(t[0].get<int>(), t[1].get<int>());
    }
    return p;
}

std::vector<BBCode> load_catalog(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open catalog " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error("malformed catalog " + path + ": " + e.what());
    }
    std::vector<BBCode> out;
    for (const auto &rec : doc.at("codes")) {
        std::string name = rec.at("name");
        RingParams params(rec.at("ell").get<int>(), rec.at("m").get<int>());
        BBCode code = build_bb_code(params, read_poly(params, rec.at("a")), read_poly(params, rec.at("b")),
                                    rec.at("d").get<int>(), name);
        int k = rec.at("k").get<int>();
        if (code.k != k) {
            throw std::runtime_error("catalog entry " + name + ": recomputed k=" + std::to_string(code.k) +
                                     " but file says " + std::to_string(k));
        }
        if (rec.contains("label") && rec.at("label").get<std::string>() != code.label) {
            throw std::runtime_error("catalog entry " + name + ": label " + rec.at("label").get<std::string>() +
                                     " does not match recomputed " + code.label);
        }
        for (size_t r = 0; r < code.hx.rows(); r++) {
            if (static_cast<int>(code.hx.row(r).popcount()) != code.omega ||
                static_cast<int>(code.hz.row(r).popcount()) != code.omega) {
                throw std::runtime_error("catalog entry " + name + ": row weight differs from omega");
            }
        }
        out.push_back(std::move(code));
    }
    return out;
}

BBCode find_code(const std::string &name, const std::string &path) {
    std::string known;
    for (auto &code : load_catalog(path)) {
        if (code.name == name) {
            return code;
        }
        known += (known.empty() ? "" : ", ") + code.name;
    }
    throw std::invalid_argument("unknown code '" + name + "' (catalog has: " + known + ")");
}

}  // namespace modqec
