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

#include "modqec/dem.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "modqec/sensitivity.h"

namespace modqec {

double merge_probability(double p1, double p2) { return p1 + p2 - 2 * p1 * p2; }

namespace {

using Signature = std::pair<std::vector<int>, std::vector<int>>;

void add(std::map<Signature, double> &acc, Signature sig, double p) {
    if (p <= 0 || (sig.first.empty() && sig.second.empty())) {
        return;
    }
    auto [it, inserted] = acc.emplace(std::move(sig), p);
    if (!inserted) {
        it->second = merge_probability(it->second, p);
    }
}

DetectorErrorModel finish(int nd, int no, const std::map<Signature, double> &acc) {
    DetectorErrorModel dem;
    dem.num_detectors = nd;
    dem.num_observables = no;
    for (const auto &[sig, p] : acc) {
        if (p <= 0) {
            continue;
        }
        dem.mechanisms.push_back(ErrorMechanism{p, sig.first, sig.second});
    }
    return dem;
}

}  // namespace

DetectorErrorModel make_dem(int num_detectors, int num_observables, const std::vector<ErrorMechanism> &raw) {
    std::map<Signature, double> acc;
    for (const auto &m : raw) {
        std::vector<int> d = m.detectors;
        std::vector<int> o = m.observables;
        std::sort(d.begin(), d.end());
        std::sort(o.begin(), o.end());
        for (int k : d) {
            if (k < 0 || k >= num_detectors) {
                throw std::out_of_range("mechanism detector out of range");
            }
        }
        for (int k : o) {
            if (k < 0 || k >= num_observables) {
                throw std::out_of_range("mechanism observable out of range");
            }
        }
        add(acc, {d, o}, m.p);
    }
    return finish(num_detectors, num_observables, acc);
}

DetectorErrorModel detector_error_model(const NoisyCircuit &circuit) {
    int nd = static_cast<int>(circuit.detectors().size());
    int no = static_cast<int>(circuit.observables().size());
    std::map<Signature, double> acc;
    auto visit = [&](double p, const BitVec &flipped) {
        if (p <= 0 || flipped.none()) {
            return;
        }
        Signature sig;
        for (size_t k : flipped.ones()) {
            if (static_cast<int>(k) < nd) {
                sig.first.push_back(static_cast<int>(k));
            } else {
                sig.second.push_back(static_cast<int>(k) - nd);
            }
        }
        add(acc, std::move(sig), p);
    };
    SensitivityResult res = propagate_items(circuit, detector_and_observable_items(circuit), visit);
    if (res.nondeterministic.any()) {
        size_t k = res.nondeterministic.first_one();
        std::string what = static_cast<int>(k) < nd ? "detector " + std::to_string(k)
                                                     : "observable " + std::to_string(k - nd);
        throw std::invalid_argument("noiseless circuit is not deterministic: " + what + " is random");
    }
    return finish(nd, no, acc);
}

void write_dem(std::ostream &out, const DetectorErrorModel &dem) {
    char buf[32];
    for (const auto &m : dem.mechanisms) {
        std::snprintf(buf, sizeof(buf), "%.17g", m.p);
        out << "error(" << buf << ')';
        for (int d : m.detectors) {
            out << " D" << d;
        }
        for (int o : m.observables) {
            out << " L" << o;
        }
        out << "\n";
    }
}

}  // namespace modqec
