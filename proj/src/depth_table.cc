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

#include "modqec/depth_table.h"

#include <set>
#include <stdexcept>

namespace modqec {

DepthCounts expected_depths(const BBCode &code, Layout layout, int T) {
    ExponentSets ea = exponent_sets(code.A);
    ExponentSets eb = exponent_sets(code.B);
    std::set<int> j_union = ea.J;
    j_union.insert(eb.J.begin(), eb.J.end());
    int ju = static_cast<int>(j_union.size());
    int ja = static_cast<int>(ea.J.size());
    int w = code.omega;
    switch (layout) {
        case Layout::sparse:
            return {2 * w * T, 2 * T * ju, 4 * T, 2 * ju + 2 * w + 4};
        case Layout::flat:
            return {2 * w * T, 4 * w * T, 4 * T, 6 * w + 4};
        case Layout::interleaved_gates:
            return {w * T + 1, w * T + 1, 2 * T, 2 * w + 2};
        case Layout::concurrent_rounds:
            return {w * T + w, T * ju + ja, 2 * T, ju + w + 2};
        case Layout::cyclic:
            break;
    }
    throw std::invalid_argument("no closed form for layout " + layout_name(layout));
}

DepthCounts measured_depths(const BBCode &code, Layout layout, int T) {
    DepthReport now = validate_program(syndrome_rounds(code, layout, T));
    DepthReport next = validate_program(syndrome_rounds(code, layout, T + 1));
    DepthCounts out;
    out.gates = now.two_qubit_layers;
    out.shifts = now.shift_layers + now.intra_shift_layers;
    // The interleaved layouts prepare every check once up front; that prologue is not
    // part of the per-round measurement column.
    bool prologue = layout == Layout::interleaved_gates || layout == Layout::concurrent_rounds;
    out.meas = now.meas_reset_layers + (prologue ? 0 : now.prep_layers);
    out.amortized = next.total_depth - now.total_depth;
    return out;
}

std::vector<DepthRow> depth_table(const BBCode &code, int T) {
    std::vector<DepthRow> rows;
    for (Layout layout : {Layout::sparse, Layout::flat, Layout::interleaved_gates, Layout::concurrent_rounds}) {
        DepthRow row;
        row.layout = layout;
        row.T = T;
        row.measured = measured_depths(code, layout, T);
        row.expected = expected_depths(code, layout, T);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace modqec
