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

#ifndef MODQEC_LAYOUTS_H
#define MODQEC_LAYOUTS_H

#include <optional>
#include <string>
#include <vector>

#include "modqec/codes.h"
#include "modqec/machine.h"

namespace modqec {

enum class Layout { cyclic, sparse, flat, interleaved_gates, concurrent_rounds };

Layout parse_layout(const std::string &name);
std::string layout_name(Layout layout);
std::string layout_names();

/// Measurement keys identify (round, check): key = round * 2*ell*m + check, where X checks
/// take indices v*m + w and Z checks ell*m + v*m + w.
int check_key(const BBCode &code, int round, Basis type, int v, int w);

/// Circuit qubit indices used by every BB layout: data u*ell*m + v*m + w, then X checks,
/// then Z checks.
int data_qubit(const BBCode &code, int u, int v, int w);
int check_qubit(const BBCode &code, Basis type, int v, int w);

/// One pass measuring every check of one type on a 2 x m array of 2*ell-qubit modules.
/// With swap_axes the array is 2 x ell and the loop runs over x exponents instead.
MachineProgram sparse_cyclic_layout(const BBCode &code, Basis basis, bool swap_axes = false, int round = 0);

/// One pass on a flat 2 x m array with intra-module shifts of period 2*ell.
MachineProgram flat_cyclic_layout(const BBCode &code, Basis basis, int round = 0);

struct MuTuple {
    std::optional<int> u_z;
    std::optional<int> u_x;
    std::optional<Monomial> q_z;
    std::optional<Monomial> q_x;
};

struct MuSchedule {
    std::vector<MuTuple> tuples;
};

/// Throws if the z side does not cover A^T (u=1) and B^T (u=0) exactly once, or the x side
/// A (u=0) and B (u=1).
void check_mu_schedule(const BBCode &code, const MuSchedule &mu);

MuSchedule mu_interleaved_gates(const BBCode &code);
MuSchedule mu_concurrent_rounds(const BBCode &code);

enum class ShiftPolicy {
    per_step,   // one shift layer for every step
    on_change,  // only when some acting row needs a new alignment
};

/// T rounds on the 3-row array: row 1 holds Z-check modules, row 2 X-check modules.
/// The first layer prepares every check qubit.
MachineProgram interleaved_layout(const BBCode &code, const MuSchedule &mu, int T, ShiftPolicy policy);

struct LayoutOptions {
    bool swap_axes = false;
    /// Module size for the cyclic layout; 0 picks 2*ell.
    int cyclic_module_size = 0;
};

/// T rounds of full syndrome extraction (both check types) for any layout.
MachineProgram syndrome_rounds(const BBCode &code, Layout layout, int T, const LayoutOptions &opts = {});

}  // namespace modqec

#endif
