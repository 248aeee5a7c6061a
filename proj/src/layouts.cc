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

#include "modqec/layouts.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "modqec/cyclic_layout.h"

namespace modqec {

static int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

Layout parse_layout(const std::string &name) {
    if (name == "cyclic") {
        return Layout::cyclic;
    }
    if (name == "sparse") {
        return Layout::sparse;
    }
    if (name == "flat") {
        return Layout::flat;
    }
    if (name == "interleaved-gates") {
        return Layout::interleaved_gates;
    }
    if (name == "concurrent-rounds") {
        return Layout::concurrent_rounds;
    }
    throw std::invalid_argument("unknown layout '" + name + "' (valid layouts: " + layout_names() + ")");
}

std::string layout_name(Layout layout) {
    switch (layout) {
        case Layout::cyclic:
            return "cyclic";
        case Layout::sparse:
            return "sparse";
        case Layout::flat:
            return "flat";
        case Layout::interleaved_gates:
            return "interleaved-gates";
        case Layout::concurrent_rounds:
            return "concurrent-rounds";
    }
    return "?";
}

std::string layout_names() { return "cyclic, sparse, flat, interleaved-gates, concurrent-rounds"; }

int check_key(const BBCode &code, int round, Basis type, int v, int w) {
    int lm = code.half();
    return round * 2 * lm + (type == Basis::Z ? lm : 0) + v * code.params.m + w;
}

int data_qubit(const BBCode &code, int u, int v, int w) {
    return u * code.half() + mod(v, code.params.ell) * code.params.m + mod(w, code.params.m);
}

int check_qubit(const BBCode &code, Basis type, int v, int w) {
    return code.n + (type == Basis::Z ? code.half() : 0) + v * code.params.m + w;
}

namespace {


/// The two polynomials acting in a pass of one check type, with their data blocks.
struct PassPolys {
    BivariatePolynomial first;
    BivariatePolynomial second;
    GateKind gate;
};

PassPolys pass_polys(const BBCode &code, Basis basis) {
    if (basis == Basis::X) {
        return {code.A, code.B, GateKind::CX};
    }
    return {transpose_poly(code.B), transpose_poly(code.A), GateKind::CZ};
}

std::vector<Monomial> sorted_terms(const BivariatePolynomial &p, bool by_i) {
    std::vector<Monomial> t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Monomial &a, const Monomial &b) {
        return by_i ? std::pair(a.i, a.j) < std::pair(b.i, b.j) : std::pair(a.j, a.i) < std::pair(b.j, b.i);
    });
    return t;
}

struct SparseGeometry {
    const BBCode &code;
    bool swap;

    int L() const { return swap ? code.params.ell : code.params.m; }
    int module_size() const { return swap ? 2 * code.params.m : 2 * code.params.ell; }
    QubitRef data(int u, int v, int w) const {
        v = mod(v, code.params.ell);
        w = mod(w, code.params.m);
        return swap ? QubitRef{0, v, u * code.params.m + w} : QubitRef{0, w, u * code.params.ell + v};
    }
    QubitRef check(Basis t, int v, int w) const {
        int z = t == Basis::Z ? 1 : 0;
        return swap ? QubitRef{1, v, z * code.params.m + w} : QubitRef{1, w, z * code.params.ell + v};
    }
    int axis(const Monomial &mono) const { return swap ? mono.i : mono.j; }
};

MachineProgram sparse_program_shell(const SparseGeometry &g) {
    ArrayConfig cfg;
    cfg.num_moving_rows = 1;
    cfg.L = g.L();
    cfg.module_size = g.module_size();
    MachineProgram p = MachineProgram::empty(cfg, 2 * g.code.n);
    const auto &rp = g.code.params;
    for (int u = 0; u < 2; u++) {
        for (int v = 0; v < rp.ell; v++) {
            for (int w = 0; w < rp.m; w++) {
                QubitRef d = g.data(u, v, w);
                p.qubit_map[0][d.module][d.slot] = data_qubit(g.code, u, v, w);
                Basis t = u ? Basis::Z : Basis::X;
                QubitRef c = g.check(t, v, w);
                p.qubit_map[1][c.module][c.slot] = check_qubit(g.code, t, v, w);
            }
        }
    }
    return p;
}

std::vector<QubitRef> all_checks(const BBCode &code, Basis t, const std::function<QubitRef(Basis, int, int)> &at,
                                 std::vector<int> *keys, int round) {
    std::vector<QubitRef> out;
    for (int v = 0; v < code.params.ell; v++) {
        for (int w = 0; w < code.params.m; w++) {
            out.push_back(at(t, v, w));
            if (keys != nullptr) {
                keys->push_back(check_key(code, round, t, v, w));
            }
        }
    }
    return out;
}

void append_sparse_pass(MachineProgram &p, int &offset, const SparseGeometry &g, Basis basis, int round) {
    const BBCode &code = g.code;
    auto at = [&](Basis t, int v, int w) { return g.check(t, v, w); };
    p.layers.push_back({Instruction::prep_plus(all_checks(code, basis, at, nullptr, round))});

    PassPolys pp = pass_polys(code, basis);
    std::vector<int> axes;
    for (const auto *poly : {&pp.first, &pp.second}) {
        for (const auto &t : poly->terms()) {
            axes.push_back(g.axis(t));
        }
    }
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());

    for (int a : axes) {
        p.layers.push_back({Instruction::shift(1, mod(a - offset, g.L()))});
        offset = a;
        for (int u = 0; u < 2; u++) {
            const auto &poly = u ? pp.second : pp.first;
            for (const auto &mono : sorted_terms(poly, !g.swap)) {
                if (g.axis(mono) != a) {
                    continue;
                }
                Instruction gate = Instruction::gate2(pp.gate, {});
                for (int v = 0; v < code.params.ell; v++) {
                    for (int w = 0; w < code.params.m; w++) {
                        gate.targets.push_back(g.check(basis, v, w));
                        gate.targets.push_back(g.data(u, v + mono.i, w + mono.j));
                    }
                }
                p.layers.push_back({gate});
            }
        }
    }
    std::vector<int> keys;
    auto targets = all_checks(code, basis, at, &keys, round);
    p.layers.push_back({Instruction::measure_x(targets, keys, false)});
}

struct FlatGeometry {
    const BBCode &code;
    QubitRef data(int u, int v, int w) const {
        return QubitRef{0, mod(w, code.params.m), 2 * mod(v, code.params.ell) + u};
    }
    QubitRef check(Basis t, int v, int w) const {
        return QubitRef{1, w, 2 * v + (t == Basis::Z ? 1 : 0)};
    }
};

MachineProgram flat_program_shell(const BBCode &code) {
    ArrayConfig cfg;
    cfg.num_moving_rows = 1;
    cfg.L = code.params.m;
    cfg.module_size = 2 * code.params.ell;
    cfg.flat = true;
    MachineProgram p = MachineProgram::empty(cfg, 2 * code.n);
    FlatGeometry g{code};
    for (int u = 0; u < 2; u++) {
        for (int v = 0; v < code.params.ell; v++) {
            for (int w = 0; w < code.params.m; w++) {
                QubitRef d = g.data(u, v, w);
                p.qubit_map[0][d.module][d.slot] = data_qubit(code, u, v, w);
                Basis t = u ? Basis::Z : Basis::X;
                QubitRef c = g.check(t, v, w);
                p.qubit_map[1][c.module][c.slot] = check_qubit(code, t, v, w);
            }
        }
    }
    return p;
}

void append_flat_pass(MachineProgram &p, int &offset, std::vector<int> &intra, const BBCode &code, Basis basis,
                      int round) {
    FlatGeometry g{code};
    int m = code.params.m;
    int period = 2 * code.params.ell;
    auto at = [&](Basis t, int v, int w) { return g.check(t, v, w); };
    p.layers.push_back({Instruction::prep_plus(all_checks(code, basis, at, nullptr, round))});
    PassPolys pp = pass_polys(code, basis);
    int check_slot0 = basis == Basis::Z ? 1 : 0;
    for (int u = 0; u < 2; u++) {
        const auto &poly = u ? pp.second : pp.first;
        for (const auto &mono : sorted_terms(poly, false)) {
            p.layers.push_back({Instruction::shift(1, mod(mono.j - offset, m))});
            offset = mono.j;
            int target = mod(2 * mono.i + u - check_slot0, period);
            Layer intra_layer;
            for (int w = 0; w < m; w++) {
                intra_layer.push_back(Instruction::intra_shift(1, w, mod(target - intra[w], period)));
                intra[w] = target;
            }
            p.layers.push_back(intra_layer);
            Instruction gate = Instruction::gate2(pp.gate, {});
            for (int v = 0; v < code.params.ell; v++) {
                for (int w = 0; w < m; w++) {
                    gate.targets.push_back(g.check(basis, v, w));
                    gate.targets.push_back(g.data(u, v + mono.i, w + mono.j));
                }
            }
            p.layers.push_back({gate});
        }
    }
    std::vector<int> keys;
    auto targets = all_checks(code, basis, at, &keys, round);
    p.layers.push_back({Instruction::measure_x(targets, keys, false)});
}

}  // namespace

MachineProgram sparse_cyclic_layout(const BBCode &code, Basis basis, bool swap_axes, int round) {
    SparseGeometry g{code, swap_axes};
    MachineProgram p = sparse_program_shell(g);
    int offset = 0;
    append_sparse_pass(p, offset, g, basis, round);
    return p;
}

MachineProgram flat_cyclic_layout(const BBCode &code, Basis basis, int round) {
    MachineProgram p = flat_program_shell(code);
    int offset = 0;
    std::vector<int> intra(code.params.m, 0);
    append_flat_pass(p, offset, intra, code, basis, round);
    return p;
}

void check_mu_schedule(const BBCode &code, const MuSchedule &mu) {
    std::map<std::pair<int, Monomial>, int> z_need;
    std::map<std::pair<int, Monomial>, int> x_need;
    BivariatePolynomial at = transpose_poly(code.A);
    BivariatePolynomial bt = transpose_poly(code.B);
    for (const auto &t : at.terms()) {
        z_need[{1, t}]++;
    }
    for (const auto &t : bt.terms()) {
        z_need[{0, t}]++;
    }
    for (const auto &t : code.A.terms()) {
        x_need[{0, t}]++;
    }
    for (const auto &t : code.B.terms()) {
        x_need[{1, t}]++;
    }
    for (const auto &t : mu.tuples) {
        if (t.u_z.has_value() != t.q_z.has_value() || t.u_x.has_value() != t.q_x.has_value()) {
            throw std::invalid_argument("mu tuple has a monomial without a block or vice versa");
        }
        if (t.q_z && --z_need[{*t.u_z, *t.q_z}] < 0) {
            throw std::invalid_argument("mu schedule repeats or invents a z-side action");
        }
        if (t.q_x && --x_need[{*t.u_x, *t.q_x}] < 0) {
            throw std::invalid_argument("mu schedule repeats or invents an x-side action");
        }
    }
    for (const auto &[k, v] : z_need) {
        if (v != 0) {
            throw std::invalid_argument("mu schedule misses a z-side action");
        }
    }
    for (const auto &[k, v] : x_need) {
        if (v != 0) {
            throw std::invalid_argument("mu schedule misses an x-side action");
        }
    }
}

MuSchedule mu_interleaved_gates(const BBCode &code) {
    if (code.A.weight() != 3 || code.B.weight() != 3) {
        throw std::invalid_argument("interleaved-gates schedule needs weight-3 polynomials");
    }
    const auto &a = code.A.terms();
    const auto &b = code.B.terms();
    auto tr = [&](const Monomial &q) { return reduce_monomial(code.params, -q.i, -q.j); };
    MuSchedule mu;
    mu.tuples = {
        {1, std::nullopt, tr(a[0]), std::nullopt},
        {1, 0, tr(a[2]), a[1]},
        {0, 1, tr(b[0]), b[1]},
        {0, 1, tr(b[1]), b[0]},
        {0, 1, tr(b[2]), b[2]},
        {1, 0, tr(a[1]), a[0]},
        {std::nullopt, 0, std::nullopt, a[2]},
    };
    return mu;
}

MuSchedule mu_concurrent_rounds(const BBCode &code) {
    auto tr = [&](const Monomial &q) { return reduce_monomial(code.params, -q.i, -q.j); };
    std::vector<Monomial> a = sorted_terms(code.A, false);
    std::vector<Monomial> b = sorted_terms(code.B, false);
    // Descending j in the middle part lets each round start where the previous one ended.
    std::stable_sort(b.begin(), b.end(), [](const Monomial &x, const Monomial &y) { return x.j > y.j; });
    MuSchedule mu;
    for (const auto &t : a) {
        mu.tuples.push_back({1, std::nullopt, tr(t), std::nullopt});
    }
    for (const auto &t : b) {
        mu.tuples.push_back({0, 1, tr(t), t});
    }
    for (const auto &t : a) {
        mu.tuples.push_back({std::nullopt, 0, std::nullopt, t});
    }
    return mu;
}

namespace {

struct SideAction {
    int round;
    int u;
    Monomial q;
};

struct Step {
    std::optional<SideAction> z;
    std::optional<SideAction> x;
};

std::vector<Step> interleaved_steps(const MuSchedule &mu, int T) {
    const auto &tu = mu.tuples;
    size_t lead_z = 0;
    while (lead_z < tu.size() && tu[lead_z].q_z && !tu[lead_z].q_x) {
        lead_z++;
    }
    size_t trail_x = 0;
    while (trail_x < tu.size() && tu[tu.size() - 1 - trail_x].q_x && !tu[tu.size() - 1 - trail_x].q_z) {
        trail_x++;
    }
    size_t merge = std::min(lead_z, trail_x);
    if (lead_z + trail_x > tu.size()) {
        merge = 0;
    }
    for (size_t k = 0; k < merge; k++) {
        if (*tu[tu.size() - merge + k].u_x == *tu[k].u_z) {
            merge = 0;
            break;
        }
    }
    auto to_step = [](const MuTuple &t, int r) {
        Step s;
        if (t.q_z) {
            s.z = SideAction{r, *t.u_z, *t.q_z};
        }
        if (t.q_x) {
            s.x = SideAction{r, *t.u_x, *t.q_x};
        }
        return s;
    };
    std::vector<Step> steps;
    for (int r = 0; r < T; r++) {
        size_t begin = r == 0 ? 0 : merge;
        size_t end = r == T - 1 ? tu.size() : tu.size() - merge;
        for (size_t k = begin; k < end; k++) {
            steps.push_back(to_step(tu[k], r));
        }
        if (r + 1 < T) {
            for (size_t k = 0; k < merge; k++) {
                Step s = to_step(tu[tu.size() - merge + k], r);
                s.z = to_step(tu[k], r + 1).z;
                steps.push_back(s);
            }
        }
    }
    return steps;
}

}  // namespace

MachineProgram interleaved_layout(const BBCode &code, const MuSchedule &mu, int T, ShiftPolicy policy) {
    check_mu_schedule(code, mu);
    if (T < 1) {
        throw std::invalid_argument("need at least one round");
    }
    const auto &rp = code.params;
    ArrayConfig cfg;
    cfg.num_moving_rows = 2;
    cfg.L = rp.m;
    cfg.module_size = 2 * rp.ell;
    MachineProgram p = MachineProgram::empty(cfg, 2 * code.n);
    const int z_row = 1;
    const int x_row = 2;
    auto data = [&](int u, int v, int w) {
        return QubitRef{0, mod(w, rp.m), u * rp.ell + mod(v, rp.ell)};
    };
    auto check = [&](Basis t, int v, int w) { return QubitRef{t == Basis::Z ? z_row : x_row, w, v}; };
    for (int u = 0; u < 2; u++) {
        for (int v = 0; v < rp.ell; v++) {
            for (int w = 0; w < rp.m; w++) {
                QubitRef d = data(u, v, w);
                p.qubit_map[0][d.module][d.slot] = data_qubit(code, u, v, w);
                Basis t = u ? Basis::Z : Basis::X;
                QubitRef c = check(t, v, w);
                p.qubit_map[c.row][c.module][c.slot] = check_qubit(code, t, v, w);
            }
        }
    }

    std::vector<QubitRef> all;
    for (Basis t : {Basis::Z, Basis::X}) {
        auto part = all_checks(code, t, check, nullptr, 0);
        all.insert(all.end(), part.begin(), part.end());
    }
    p.layers.push_back({Instruction::prep_plus(all)});

    std::vector<Step> steps = interleaved_steps(mu, T);
    std::vector<int> last_z(T, -1);
    std::vector<int> last_x(T, -1);
    for (size_t k = 0; k < steps.size(); k++) {
        if (steps[k].z) {
            last_z[steps[k].z->round] = static_cast<int>(k);
        }
        if (steps[k].x) {
            last_x[steps[k].x->round] = static_cast<int>(k);
        }
    }

    int offset[3] = {0, 0, 0};
    for (size_t k = 0; k < steps.size(); k++) {
        const Step &s = steps[k];
        Layer shifts;
        bool changed = false;
        for (int row : {z_row, x_row}) {
            const auto &act = row == z_row ? s.z : s.x;
            if (!act) {
                continue;
            }
            int amount = mod(act->q.j - offset[row], rp.m);
            changed |= amount != 0;
            if (policy == ShiftPolicy::per_step || k == 0 || amount != 0) {
                shifts.push_back(Instruction::shift(row, amount));
            }
            offset[row] = act->q.j;
        }
        if (policy == ShiftPolicy::per_step || k == 0 || changed) {
            p.layers.push_back(shifts);
        }
        Layer gates;
        if (s.z) {
            Instruction g = Instruction::gate2(GateKind::CZ, {});
            for (int v = 0; v < rp.ell; v++) {
                for (int w = 0; w < rp.m; w++) {
                    g.targets.push_back(check(Basis::Z, v, w));
                    g.targets.push_back(data(s.z->u, v + s.z->q.i, w + s.z->q.j));
                }
            }
            gates.push_back(g);
        }
        if (s.x) {
            Instruction g = Instruction::gate2(GateKind::CX, {});
            for (int v = 0; v < rp.ell; v++) {
                for (int w = 0; w < rp.m; w++) {
                    g.targets.push_back(check(Basis::X, v, w));
                    g.targets.push_back(data(s.x->u, v + s.x->q.i, w + s.x->q.j));
                }
            }
            gates.push_back(g);
        }
        p.layers.push_back(gates);
        for (int r = 0; r < T; r++) {
            for (Basis t : {Basis::Z, Basis::X}) {
                if ((t == Basis::Z ? last_z[r] : last_x[r]) == static_cast<int>(k)) {
                    std::vector<int> keys;
                    auto targets = all_checks(code, t, check, &keys, r);
                    p.layers.push_back({Instruction::measure_x(targets, keys, true)});
                }
            }
        }
    }
    return p;
}

MachineProgram syndrome_rounds(const BBCode &code, Layout layout, int T, const LayoutOptions &opts) {
    if (T < 1) {
        throw std::invalid_argument("need at least one round");
    }
    switch (layout) {
        case Layout::sparse: {
            SparseGeometry g{code, opts.swap_axes};
            MachineProgram p = sparse_program_shell(g);
            int offset = 0;
            for (int r = 0; r < T; r++) {
                append_sparse_pass(p, offset, g, Basis::X, r);
                append_sparse_pass(p, offset, g, Basis::Z, r);
            }
            return p;
        }
        case Layout::flat: {
            MachineProgram p = flat_program_shell(code);
            int offset = 0;
            std::vector<int> intra(code.params.m, 0);
            for (int r = 0; r < T; r++) {
                append_flat_pass(p, offset, intra, code, Basis::X, r);
                append_flat_pass(p, offset, intra, code, Basis::Z, r);
            }
            return p;
        }
        case Layout::interleaved_gates:
            return interleaved_layout(code, mu_interleaved_gates(code), T, ShiftPolicy::per_step);
        case Layout::concurrent_rounds:
            return interleaved_layout(code, mu_concurrent_rounds(code), T, ShiftPolicy::on_change);
        case Layout::cyclic: {
            StabilizerCode stab = stabilizer_generators(code);
            std::vector<PauliOperator> ops;
            for (int r = 0; r < T; r++) {
                ops.insert(ops.end(), stab.generators().begin(), stab.generators().end());
            }
            int n = opts.cyclic_module_size > 0 ? opts.cyclic_module_size : 2 * code.params.ell;
            int L = (code.n + n - 1) / n + 1;
            return cyclic_layout(ops, n, L).program;
        }
    }
    throw std::invalid_argument("unknown layout");
}

}  // namespace modqec
