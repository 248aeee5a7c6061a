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

#ifndef MODQEC_DEPTH_TABLE_H
#define MODQEC_DEPTH_TABLE_H

#include <vector>

#include "modqec/codes.h"
#include "modqec/layouts.h"

namespace modqec {

struct DepthCounts {
    int gates = 0;
    int shifts = 0;
    int meas = 0;
    int amortized = 0;
    bool operator==(const DepthCounts &) const = default;
};

struct DepthRow {
    Layout layout;
    int T = 0;
    DepthCounts measured;
    DepthCounts expected;
    bool matches() const { return measured == expected; }
};

/// Closed-form layer counts for T rounds.
DepthCounts expected_depths(const BBCode &code, Layout layout, int T);
/// Layer counts of the compiled T-round program; amortized is depth(T+1) - depth(T).
DepthCounts measured_depths(const BBCode &code, Layout layout, int T);

/// One row per layout among sparse, flat, interleaved-gates and concurrent-rounds.
std::vector<DepthRow> depth_table(const BBCode &code, int T);

}  // namespace modqec

#endif
