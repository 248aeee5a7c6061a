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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modqec/catalog.h"
#include "modqec/cyclic_layout.h"
#include "modqec/decoder.h"
#include "modqec/depth_table.h"
#include "modqec/experiment.h"
#include "modqec/fit.h"
#include "modqec/layouts.h"
#include "modqec/memory.h"
#include "modqec/oracle_check.h"
#include "modqec/verify.h"

using namespace modqec;

namespace {

// Tolerances and sample sizes.
constexpr double kOracleTv = 1e-9;
constexpr double kMonteCarloFactor = 3.0;
constexpr double kSlopeFactor = 2.0;
constexpr double kFitRelative = 1e-3;
constexpr double kRepetitionFailure = 0.028;
constexpr uint64_t kMonteCarloShots = 20000;
constexpr uint64_t kSlopeShots = 4000;
constexpr uint64_t kModularityShots = 10000;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

int axis_union(const BBCode &code, bool swap) {
    ExponentSets a = exponent_sets(code.A);
    ExponentSets b = exponent_sets(code.B);
    std::set<int> u = swap ? a.I : a.J;
    const std::set<int> &other = swap ? b.I : b.J;
    u.insert(other.begin(), other.end());
    return static_cast<int>(u.size());
}

Outcome depth_twelve() {
    Outcome out{true, ""};
    std::ostringstream ss;
    for (const auto &code : load_catalog()) {
        for (bool swap : {false, true}) {
            for (Basis basis : {Basis::X, Basis::Z}) {
                int depth = validate_program(sparse_cyclic_layout(code, basis, swap)).total_depth;
                int expect = axis_union(code, swap) + code.omega + 2;
                if (depth != expect || (!swap && depth > 12)) {
                    out.pass = false;
                    ss << code.name << (swap ? " swapped " : " ") << basis_name(basis) << " depth " << depth
                       << " vs " << expect << "; ";
                }
            }
        }
        ss << code.name << "=" << validate_program(sparse_cyclic_layout(code, Basis::X)).total_depth << " ";
    }
    out.detail = ss.str();
    return out;
}

std::string counts(const DepthCounts &c) {
    std::ostringstream ss;
    ss << c.gates << "/" << c.shifts << "/" << c.meas << "/" << c.amortized;
    return ss.str();
}

Outcome depth_table_rows() {
    Outcome out{true, ""};
    int rows = 0;
    std::ostringstream ss;
    for (const auto &code : load_catalog()) {
        for (int T : {1, 5, 10}) {
            for (const DepthRow &row : depth_table(code, T)) {
                rows++;
                if (!row.matches()) {
                    out.pass = false;
                    ss << code.name << " " << layout_name(row.layout) << " T=" << T << " measured "
                       << counts(row.measured) << " expected " << counts(row.expected) << "; ";
                }
            }
        }
    }
    out.detail = std::to_string(rows) + " rows" + (out.pass ? "" : ", mismatches: " + ss.str());
    return out;
}

PauliOperator random_pauli(std::mt19937_64 &rng, int N) {
    PauliOperator p(N);
    while (p.is_identity()) {
        for (int q = 0; q < N; q++) {
            uint64_t k = rng() % 4;
            p.xs().set(q, k & 1);
            p.zs().set(q, k >> 1);
        }
    }
    return p;
}

bool independent_of(const std::vector<PauliOperator> &ops, const PauliOperator &p) {
    return ops.empty() || !StabilizerCode(p.num_qubits(), ops).in_stabilizer_group(p);
}

Outcome cyclic_bound() {
    std::mt19937_64 rng(2024);
    int failures = 0;
    std::ostringstream ss;
    for (int inst = 0; inst < 100; inst++) {
        int n = 1 + static_cast<int>(rng() % 3);
        int L = 2 + static_cast<int>(rng() % 5);
        int N = 1 + static_cast<int>(rng() % std::min(12, n * (L - 1)));
        int r_target = 1 + static_cast<int>(rng() % std::min(12, N));
        std::vector<PauliOperator> ops;
        for (int tries = 0; static_cast<int>(ops.size()) < r_target && tries < 1000; tries++) {
            PauliOperator p = random_pauli(rng, N);
            bool ok = true;
            for (const auto &o : ops) {
                ok = ok && o.commutes(p);
            }
            if (ok && independent_of(ops, p)) {
                ops.push_back(p);
            }
        }
        int r = static_cast<int>(ops.size());
        int depth = validate_program(cyclic_layout(ops, n, L).program).total_depth;
        int bound = cyclic_depth_bound(r, n, L);
        if (depth > bound) {
            failures++;
            ss << " [n=" << n << " L=" << L << " N=" << N << " r=" << r << " depth " << depth << " > " << bound
               << "]";
        }
    }
    return {failures == 0, std::to_string(100 - failures) + "/100 within bound" + ss.str()};
}

Outcome sequential_equivalence() {
    std::mt19937_64 rng(7);
    double worst_tv = 0;
    double worst_fidelity = 1;
    int anticommuting = 0;
    for (int inst = 0; inst < 200; inst++) {
        int N = 1 + static_cast<int>(rng() % 4);
        int r = 1 + static_cast<int>(rng() % 4);
        int n = 1 + static_cast<int>(rng() % 3);
        int L = 1 + (N + n - 1) / n + static_cast<int>(rng() % 2);
        std::vector<PauliOperator> ops;
        for (int k = 0; k < r; k++) {
            ops.push_back(random_pauli(rng, N));
        }
        bool has_pair = false;
        for (int a = 0; a < r; a++) {
            for (int b = a + 1; b < r; b++) {
                has_pair = has_pair || !ops[a].commutes(ops[b]);
            }
        }
        anticommuting += has_pair;
        OracleComparison cmp = compare_with_oracle(ops, n, L);
        worst_tv = std::max(worst_tv, cmp.tv_distance);
        worst_fidelity = std::min(worst_fidelity, cmp.min_fidelity);
    }
    bool pass = worst_tv <= kOracleTv && worst_fidelity >= 1 - kOracleTv && anticommuting > 0;
    return {pass, "worst TV " + fmt("%.2e", worst_tv) + ", worst fidelity " + fmt("%.12f", worst_fidelity) + ", " +
                      std::to_string(anticommuting) + "/200 lists with anticommuting pairs"};
}

Outcome noiseless_determinism() {
    Outcome out{true, ""};
    int circuits = 0;
    std::ostringstream ss;
    for (const auto &code : load_catalog()) {
        int T = code.known_distance.value_or(2);
        for (Layout layout : {Layout::cyclic, Layout::sparse, Layout::flat, Layout::interleaved_gates,
                              Layout::concurrent_rounds}) {
            for (Basis basis : {Basis::X, Basis::Z}) {
                MemoryExperiment ex = build_memory_experiment(code, layout, basis, T, NoiseModel{});
                VerifyReport rep = verify_noiseless(ex.circuit);
                circuits++;
                if (!rep.ok()) {
                    out.pass = false;
                    ss << code.name << " " << layout_name(layout) << " " << basis_name(basis) << ": "
                       << rep.problems.front() << "; ";
                }
            }
            GroupReport group = check_layout_group(code, layout);
            if (!group.ok() || !group.group_equal) {
                out.pass = false;
                ss << code.name << " " << layout_name(layout) << " group mismatch; ";
            }
        }
    }
    out.detail = std::to_string(circuits) + " circuits at T=d" + (out.pass ? "" : ": " + ss.str());
    return out;
}

Outcome code_parameters() {
    std::map<std::string, std::pair<int, int>> expect{
        {"bb72", {72, 12}}, {"bb90", {90, 8}}, {"bb108", {108, 8}}, {"bb144", {144, 12}}};
    Outcome out{true, ""};
    std::ostringstream ss;
    auto codes = load_catalog();
    if (codes.size() != expect.size()) {
        out.pass = false;
    }
    for (const auto &code : codes) {
        int rank_k = code.n - static_cast<int>(gf2_rank(code.hx)) - static_cast<int>(gf2_rank(code.hz));
        bool commute = (code.hx * code.hz.transpose()).is_zero();
        auto it = expect.find(code.name);
        bool ok = it != expect.end() && code.n == it->second.first && rank_k == it->second.second &&
                  code.k == rank_k && code.omega == 6 && commute;
        out.pass = out.pass && ok;
        ss << "[[" << code.n << "," << rank_k << "]] w=" << code.omega << (commute ? "" : " HxHz^T!=0") << " ";
    }
    out.detail = ss.str();
    return out;
}

ExperimentSpec bb72_spec(uint64_t shots) {
    ExperimentSpec spec;
    spec.code = "bb72";
    spec.layout = Layout::sparse;
    spec.parallelism = Parallelism::chain;
    spec.tau_s = 30;
    spec.tau_m = 30;
    spec.shots = shots;
    spec.seed = 20240601;
    return spec;
}

Outcome desk_scale() {
    double p = 2e-3;
    LogicalErrorEstimate est = run_memory_experiment(bb72_spec(kMonteCarloShots), p);
    double reference = reference_fit("bb72", "sparse").fit.predict(p);
    double ratio = est.p_L_round / reference;
    bool pass = ratio >= 1 / kMonteCarloFactor && ratio <= kMonteCarloFactor;
    return {pass, "p_L_round " + fmt("%.3e", est.p_L_round) + " [" + fmt("%.3e", est.ci_low) + ", " +
                      fmt("%.3e", est.ci_high) + "] vs " + fmt("%.3e", reference) + " (ratio " + fmt("%.2f", ratio) +
                      ", " + std::to_string(est.failures) + "/" + std::to_string(est.shots) + " failures)"};
}

Outcome distance_slope() {
    ExperimentSpec spec = bb72_spec(kSlopeShots);
    LogicalErrorEstimate lo = run_memory_experiment(spec, 5e-3);
    LogicalErrorEstimate hi = run_memory_experiment(spec, 1e-2);
    const FitResult &ref = reference_fit("bb72", "sparse").fit;
    double predicted = ref.predict(1e-2) / ref.predict(5e-3);
    double measured = hi.p_L_round / lo.p_L_round;
    double factor = measured / predicted;
    bool pass = factor >= 1 / kSlopeFactor && factor <= kSlopeFactor;
    return {pass, "ratio " + fmt("%.3f", measured) + " (" + fmt("%.3e", hi.p_L_round) + " / " +
                      fmt("%.3e", lo.p_L_round) + ") vs model " + fmt("%.3f", predicted)};
}

Outcome modularity() {
    ModularityReport rep = modularity_comparison(bb72_spec(kModularityShots), 4e-3);
    const auto &a = rep.with_shift_noise;
    const auto &b = rep.doubled_without_shift_noise;
    return {rep.verdict == Verdict::confirmed,
            verdict_name(rep.verdict) + ": p=4e-3 tau_s=30 " + fmt("%.3e", a.p_L_round) + " [" + fmt("%.3e", a.ci_low) +
                ", " + fmt("%.3e", a.ci_high) + "] vs 2p tau_s=0 " + fmt("%.3e", b.p_L_round) + " [" +
                fmt("%.3e", b.ci_low) + ", " + fmt("%.3e", b.ci_high) + "]"};
}

Outcome fit_round_trip() {
    double worst = 0;
    for (const auto &ref : reference_fits()) {
        std::vector<FitPoint> pts;
        for (double p : {2e-3, 3e-3, 4e-3, 5e-3, 6e-3}) {
            pts.push_back({p, ref.fit.predict(p)});
        }
        FitResult got = fit_curve(pts, ref.fit.d);
        for (auto [g, w] : {std::pair{got.c0, ref.fit.c0}, {got.c1, ref.fit.c1}, {got.c2, ref.fit.c2}}) {
            worst = std::max(worst, std::fabs(g - w) / std::fabs(w));
        }
    }
    return {worst <= kFitRelative, std::to_string(reference_fits().size()) + " rows, worst relative error " +
                                       fmt("%.2e", worst)};
}

BitVec syndrome_of(const DetectorErrorModel &dem, const std::vector<int> &mechs) {
    BitVec s(dem.num_detectors);
    for (int j : mechs) {
        for (int d : dem.mechanisms[j].detectors) {
            s.flip(d);
        }
    }
    return s;
}

BitVec observables_of(const DetectorErrorModel &dem, const std::vector<int> &mechs) {
    BitVec o(dem.num_observables);
    for (int j : mechs) {
        for (int k : dem.mechanisms[j].observables) {
            o.flip(k);
        }
    }
    return o;
}

Outcome decoder_oracle() {
    double p = 0.1;
    DetectorErrorModel rep = make_dem(2, 1, {{p, {0}, {0}}, {p, {0, 1}, {}}, {p, {1}, {}}});
    double fail = 0;
    for (int pattern = 0; pattern < 8; pattern++) {
        std::vector<int> mechs;
        for (int j = 0; j < 3; j++) {
            if ((pattern >> j) & 1) {
                mechs.push_back(j);
            }
        }
        if (!(decode(rep, syndrome_of(rep, mechs)).prediction == observables_of(rep, mechs))) {
            int k = static_cast<int>(mechs.size());
            fail += std::pow(p, k) * std::pow(1 - p, 3 - k);
        }
    }

    std::mt19937_64 rng(12);
    std::set<std::vector<int>> seen;
    std::vector<ErrorMechanism> raw;
    while (raw.size() < 20) {
        std::vector<int> dets;
        for (int d = 0; d < 12; d++) {
            if (rng() % 5 == 0) {
                dets.push_back(d);
            }
        }
        if (dets.empty() || !seen.insert(dets).second) {
            continue;
        }
        std::vector<int> obs;
        if (rng() & 1) {
            obs.push_back(static_cast<int>(rng() % 2));
        }
        raw.push_back({0.01 + 0.001 * static_cast<double>(raw.size()), dets, obs});
    }
    DetectorErrorModel toy = make_dem(12, 2, raw);
    BpOsdDecoder dec(toy, DecoderConfig{});
    int recovered = 0;
    for (int j = 0; j < static_cast<int>(toy.mechanisms.size()); j++) {
        DecodeResult r = dec.decode(syndrome_of(toy, {j}));
        recovered += r.mechanisms == std::vector<int>{j} && r.prediction == observables_of(toy, {j});
    }
    bool pass = std::fabs(fail - kRepetitionFailure) < 1e-12 && recovered == 20;
    return {pass, "repetition failure " + fmt("%.6f", fail) + ", toy recovered " + std::to_string(recovered) + "/20"};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"sparse layout depth", 1, depth_twelve},
        {"layer count table", 5, depth_table_rows},
        {"cyclic layout depth bound", 10, cyclic_bound},
        {"sequential measurement equivalence", 120, sequential_equivalence},
        {"noiseless determinism and measured group", 60, noiseless_determinism},
        {"code parameters", 5, code_parameters},
        {"desk-scale logical error rate", 1800, desk_scale},
        {"distance slope", 1800, distance_slope},
        {"modularity factor two", 1800, modularity},
        {"fit round trip", 1, fit_round_trip},
        {"decoder oracle", 1, decoder_oracle},
    };
    int passed = 0;
    int errors = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("error: ") + e.what()};
            errors++;
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = seconds <= c.budget_seconds;
        bool pass = out.pass && in_time;
        passed += pass;
        std::printf("%s  %s: %s (%.1f s%s)\n", pass ? "PASS" : "FAIL", c.name.c_str(), out.detail.c_str(), seconds,
                    in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", passed, criteria.size());
    return errors == 0 ? 0 : 1;
}
