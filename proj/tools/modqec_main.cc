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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "modqec/catalog.h"
#include "modqec/depth_table.h"
#include "modqec/experiment.h"
#include "modqec/fit.h"
#include "modqec/layouts.h"
#include "modqec/memory.h"
#include "modqec/oracle_check.h"
#include "modqec/program_io.h"
#include "modqec/results_csv.h"
#include "modqec/verify.h"

using namespace modqec;
using nlohmann::json;

namespace {

struct Flags {
    std::string config;
    std::string code;
    std::string layout;
    std::string basis;
    std::vector<double> p;
    int tau_s = 0;
    int tau_m = 0;
    int rounds = 0;
    uint64_t shots = 0;
    uint64_t seed = 0;
    std::string out;
    std::string catalog;
    std::string parallelism;
    int osd_order = 0;
    int threads = 0;
    bool swap_axes = false;
    bool both_check_types = false;
};

Parallelism parse_parallelism(const std::string &name) {
    if (name == "full") {
        return Parallelism::full;
    }
    if (name == "chain") {
        return Parallelism::chain;
    }
    throw std::invalid_argument("unknown parallelism '" + name + "' (expected full or chain)");
}

BpVariant parse_variant(const std::string &name) {
    if (name == "min-sum") {
        return BpVariant::min_sum;
    }
    if (name == "product-sum") {
        return BpVariant::product_sum;
    }
    throw std::invalid_argument("unknown BP variant '" + name + "' (expected min-sum or product-sum)");
}

// Keys mirror ExperimentSpec; unknown keys are rejected.
void apply_config(ExperimentSpec &spec, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception &e) {
        throw std::runtime_error("malformed config " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw std::runtime_error("malformed config " + path + ": expected an object");
    }
    try {
        for (const auto &[key, v] : j.items()) {
            if (key == "code") {
                spec.code = v.get<std::string>();
            } else if (key == "layout") {
                spec.layout = parse_layout(v.get<std::string>());
            } else if (key == "basis") {
                spec.basis = parse_basis(v.get<std::string>());
            } else if (key == "p") {
                spec.p = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
            } else if (key == "tau_s") {
                spec.tau_s = v.get<int>();
            } else if (key == "tau_m") {
                spec.tau_m = v.get<int>();
            } else if (key == "rounds") {
                spec.rounds = v.get<int>();
            } else if (key == "shots") {
                spec.shots = v.get<uint64_t>();
            } else if (key == "seed") {
                spec.seed = v.get<uint64_t>();
            } else if (key == "parallelism") {
                spec.parallelism = parse_parallelism(v.get<std::string>());
            } else if (key == "both_check_types") {
                spec.both_check_types = v.get<bool>();
            } else if (key == "catalog_path") {
                spec.catalog_path = v.get<std::string>();
            } else if (key == "threads") {
                spec.threads = v.get<int>();
            } else if (key == "decoder") {
                for (const auto &[dk, dv] : v.items()) {
                    if (dk == "bp_iterations") {
                        spec.decoder.bp_iterations = dv.get<int>();
                    } else if (dk == "variant") {
                        spec.decoder.variant = parse_variant(dv.get<std::string>());
                    } else if (dk == "min_sum_scale") {
                        spec.decoder.min_sum_scale = dv.get<double>();
                    } else if (dk == "osd_order") {
                        spec.decoder.osd_order = dv.get<int>();
                    } else {
                        throw std::runtime_error("unknown decoder key '" + dk + "'");
                    }
                }
            } else {
                throw std::runtime_error("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception &e) {
        throw std::runtime_error("malformed config " + path + ": " + e.what());
    }
}

class Runner {
   public:
    // Defaults, then the config file, then any flag given on the command line.
    ExperimentSpec spec(const CLI::App &sub) const {
        ExperimentSpec s;
        if (!f.config.empty()) {
            apply_config(s, f.config);
        }
        auto given = [&](const char *name) { return sub.count(name) > 0; };
        if (given("--code")) {
            s.code = f.code;
        }
        if (given("--layout")) {
            s.layout = parse_layout(f.layout);
        }
        if (given("--basis")) {
            s.basis = parse_basis(f.basis);
        }
        if (given("--p")) {
            s.p = f.p;
        }
        if (given("--tau-s")) {
            s.tau_s = f.tau_s;
        }
        if (given("--tau-m")) {
            s.tau_m = f.tau_m;
        }
        if (given("--rounds")) {
            s.rounds = f.rounds;
        }
        if (given("--shots")) {
            s.shots = f.shots;
        }
        if (given("--seed")) {
            s.seed = f.seed;
        }
        if (given("--catalog")) {
            s.catalog_path = f.catalog;
        }
        if (given("--parallelism")) {
            s.parallelism = parse_parallelism(f.parallelism);
        }
        if (given("--osd-order")) {
            s.decoder.osd_order = f.osd_order;
        }
        if (given("--threads")) {
            s.threads = f.threads;
        }
        if (given("--both-check-types")) {
            s.both_check_types = true;
        }
        return s;
    }

    BBCode code(const ExperimentSpec &s) const {
        return s.catalog_path.empty() ? find_code(s.code) : find_code(s.code, s.catalog_path);
    }

    std::vector<BBCode> catalog(const ExperimentSpec &s) const {
        return s.catalog_path.empty() ? load_catalog() : load_catalog(s.catalog_path);
    }

    Flags f;
};

int cmd_catalog(const Runner &r, const CLI::App &sub) {
    auto codes = r.catalog(r.spec(sub));
    std::printf("%-8s %5s %4s %4s %4s  %s\n", "name", "n", "k", "d", "w", "label");
    for (const auto &code : codes) {
        std::string d = code.known_distance ? std::to_string(*code.known_distance) : "?";
        std::printf("%-8s %5d %4d %4s %4d  %s\n", code.name.c_str(), code.n, code.k, d.c_str(), code.omega,
                    code.label.c_str());
    }
    return 0;
}

MachineProgram compile_program(const Runner &r, const CLI::App &sub) {
    ExperimentSpec s = r.spec(sub);
    BBCode code = r.code(s);
    if (sub.count("--rounds") == 0 && (s.layout == Layout::sparse || s.layout == Layout::flat)) {
        return s.layout == Layout::sparse ? sparse_cyclic_layout(code, s.basis, r.f.swap_axes)
                                          : flat_cyclic_layout(code, s.basis);
    }
    LayoutOptions opts;
    opts.swap_axes = r.f.swap_axes;
    MachineProgram p = syndrome_rounds(code, s.layout, std::max(1, s.rounds), opts);
    return s.parallelism == Parallelism::chain ? serialize_chain_sequential(p) : p;
}

int cmd_compile(const Runner &r, const CLI::App &sub) {
    MachineProgram p = compile_program(r, sub);
    validate_program(p);
    if (r.f.out.empty()) {
        write_program(std::cout, p);
    } else {
        std::ofstream out(r.f.out);
        if (!out) {
            throw std::runtime_error("cannot write " + r.f.out);
        }
        write_program(out, p);
    }
    return 0;
}

int cmd_verify(const Runner &r, const CLI::App &sub) {
    ExperimentSpec s = r.spec(sub);
    BBCode code = r.code(s);
    LayoutOptions opts;
    opts.swap_axes = r.f.swap_axes;
    bool ok = true;
    if (s.layout == Layout::sparse || s.layout == Layout::flat) {
        for (Basis b : {Basis::X, Basis::Z}) {
            MachineProgram pass = s.layout == Layout::sparse ? sparse_cyclic_layout(code, b, opts.swap_axes)
                                                             : flat_cyclic_layout(code, b);
            std::printf("%s pass: depth %d\n", basis_name(b), validate_program(pass).total_depth);
        }
    } else {
        std::printf("round: depth %d\n", validate_program(syndrome_rounds(code, s.layout, 1, opts)).total_depth);
    }
    GroupReport group = check_layout_group(code, s.layout, opts);
    std::printf("measured group: %d checks, %d mismatched, %s\n", group.measured, group.mismatched,
                group.group_equal ? "equal to the code's stabilizer group" : "NOT equal");
    ok = ok && group.ok() && group.group_equal;
    for (const auto &problem : group.problems) {
        std::fprintf(stderr, "%s\n", problem.c_str());
    }
    int T = s.rounds > 0 ? s.rounds : code.known_distance.value_or(2);
    MemoryOptions mopts;
    mopts.parallelism = s.parallelism;
    mopts.layout = opts;
    for (Basis b : {Basis::X, Basis::Z}) {
        MemoryExperiment ex = build_memory_experiment(code, s.layout, b, T, NoiseModel{}, mopts);
        VerifyReport rep = verify_noiseless(ex.circuit);
        std::printf("%s memory, T=%d: %zu detectors, %zu observables, %s\n", basis_name(b), T,
                    ex.circuit.detectors().size(), ex.circuit.observables().size(),
                    rep.ok() ? "all deterministic" : "FAILED");
        for (const auto &problem : rep.problems) {
            std::fprintf(stderr, "%s\n", problem.c_str());
        }
        ok = ok && rep.ok();
    }
    return ok ? 0 : 1;
}

int cmd_depth(const Runner &r, const CLI::App &sub) {
    ExperimentSpec s = r.spec(sub);
    BBCode code = r.code(s);
    int T = s.rounds > 0 ? s.rounds : 1;
    std::printf("%s T=%d  gates/shifts/meas/amortized\n", code.name.c_str(), T);
    std::printf("%-18s %-18s %-18s %s\n", "layout", "measured", "closed form", "match");
    bool ok = true;
    for (const DepthRow &row : depth_table(code, T)) {
        auto str = [](const DepthCounts &c) {
            std::ostringstream ss;
            ss << c.gates << "/" << c.shifts << "/" << c.meas << "/" << c.amortized;
            return ss.str();
        };
        std::printf("%-18s %-18s %-18s %s\n", layout_name(row.layout).c_str(), str(row.measured).c_str(),
                    str(row.expected).c_str(), row.matches() ? "yes" : "NO");
        ok = ok && row.matches();
    }
    return ok ? 0 : 1;
}

void print_estimate(const LogicalErrorEstimate &e) {
    std::printf("%s %s %s p=%g tau_s=%d T=%d: %llu/%llu failures, p_L_round %.4e [%.4e, %.4e]\n", e.code.c_str(),
                e.layout.c_str(), e.basis.c_str(), e.p, e.tau_s, e.T, static_cast<unsigned long long>(e.failures),
                static_cast<unsigned long long>(e.shots), e.p_L_round, e.ci_low, e.ci_high);
}

int cmd_experiment(const Runner &r, const CLI::App &sub) {
    ExperimentSpec s = r.spec(sub);
    std::vector<LogicalErrorEstimate> rows;
    for (double p : s.p) {
        rows.push_back(run_memory_experiment(s, p));
        print_estimate(rows.back());
    }
    export_results(rows, r.f.out.empty() ? "results.csv" : r.f.out);
    return 0;
}

int cmd_modularity(const Runner &r, const CLI::App &sub) {
    ExperimentSpec s = r.spec(sub);
    std::vector<LogicalErrorEstimate> rows;
    for (double p : s.p) {
        ModularityReport rep = modularity_comparison(s, p);
        print_estimate(rep.with_shift_noise);
        print_estimate(rep.doubled_without_shift_noise);
        std::printf("verdict: %s\n", verdict_name(rep.verdict).c_str());
        rows.push_back(rep.with_shift_noise);
        rows.push_back(rep.doubled_without_shift_noise);
    }
    if (!r.f.out.empty()) {
        export_results(rows, r.f.out);
    }
    return 0;
}

int cmd_fit(const Runner &r, const CLI::App &sub, const std::string &input) {
    ExperimentSpec s = r.spec(sub);
    std::map<std::pair<std::string, std::string>, std::vector<FitPoint>> groups;
    for (const auto &e : read_results(input)) {
        if (sub.count("--code") && e.code != s.code) {
            continue;
        }
        if (sub.count("--layout") && e.layout != layout_name(s.layout)) {
            continue;
        }
        groups[{e.code, e.layout}].push_back({e.p, e.p_L_round});
    }
    if (groups.empty()) {
        throw std::runtime_error("no matching rows in " + input);
    }
    for (const auto &[key, pts] : groups) {
        ExperimentSpec cs = s;
        cs.code = key.first;
        BBCode code = r.code(cs);
        if (!code.known_distance) {
            throw std::runtime_error("code " + key.first + " has no known distance");
        }
        FitResult fit = fit_curve(pts, *code.known_distance);
        std::printf("%s %s: c0=%.5g c1=%.5g c2=%.5g residual=%.3g points=%d\n", key.first.c_str(), key.second.c_str(),
                    fit.c0, fit.c1, fit.c2, fit.residual_norm, fit.points_used);
        for (const auto &ref : reference_fits()) {
            if (ref.code == key.first && ref.layout == key.second) {
                std::printf("  reference: c0=%.5g c1=%.5g c2=%.5g\n", ref.fit.c0, ref.fit.c1, ref.fit.c2);
            }
        }
    }
    return 0;
}

int cmd_oracle(const Runner &r, const CLI::App &sub, int instances) {
    ExperimentSpec s = r.spec(sub);
    std::mt19937_64 rng(s.seed);
    double worst_tv = 0;
    double worst_fidelity = 1;
    for (int inst = 0; inst < instances; inst++) {
        int N = 1 + static_cast<int>(rng() % 4);
        int count = 1 + static_cast<int>(rng() % 4);
        int n = 1 + static_cast<int>(rng() % 3);
        int L = 1 + (N + n - 1) / n + static_cast<int>(rng() % 2);
        std::vector<PauliOperator> ops;
        for (int k = 0; k < count; k++) {
            PauliOperator p(N);
            while (p.is_identity()) {
                for (int q = 0; q < N; q++) {
                    uint64_t bits = rng() % 4;
                    p.xs().set(q, bits & 1);
                    p.zs().set(q, bits >> 1);
                }
            }
            ops.push_back(p);
        }
        OracleComparison cmp = compare_with_oracle(ops, n, L);
        worst_tv = std::max(worst_tv, cmp.tv_distance);
        worst_fidelity = std::min(worst_fidelity, cmp.min_fidelity);
    }
    std::printf("%d instances: worst TV distance %.3e, worst fidelity %.12f\n", instances, worst_tv, worst_fidelity);
    return worst_tv <= 1e-9 && worst_fidelity >= 1 - 1e-9 ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compile, verify and simulate syndrome extraction on 2 x L module arrays"};
    app.require_subcommand(1);
    app.footer("Precedence: built-in defaults < --config file < command-line flags.");
    Runner r;
    Flags &f = r.f;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--config", f.config, "JSON file with ExperimentSpec fields")->check(CLI::ExistingFile);
        sub->add_option("--code", f.code, "catalog code name");
        sub->add_option("--layout", f.layout, "cyclic, sparse, flat, interleaved-gates or concurrent-rounds");
        sub->add_option("--basis", f.basis, "memory basis, X or Z");
        sub->add_option("--p", f.p, "physical error rate (repeatable)")->allow_extra_args(false);
        sub->add_option("--tau-s", f.tau_s, "shift duration in idle units");
        sub->add_option("--tau-m", f.tau_m, "measurement duration in idle units");
        sub->add_option("--rounds", f.rounds, "syndrome rounds T");
        sub->add_option("--shots", f.shots, "Monte-Carlo shots per point");
        sub->add_option("--seed", f.seed, "master seed");
        sub->add_option("--out", f.out, "output path");
        sub->add_option("--catalog", f.catalog, "code catalog JSON");
        sub->add_option("--parallelism", f.parallelism, "full or chain");
        sub->add_option("--osd-order", f.osd_order, "OSD order");
        sub->add_option("--threads", f.threads, "worker threads, 0 for the OpenMP default");
        sub->add_flag("--swap-axes", f.swap_axes, "loop over x exponents in the sparse layout");
        sub->add_flag("--both-check-types", f.both_check_types, "detectors for both check types");
    };

    auto *catalog = app.add_subcommand("catalog", "list catalog codes");
    auto *compile = app.add_subcommand("compile", "emit a machine program");
    auto *verify = app.add_subcommand("verify", "noiseless determinism and measured-group check");
    auto *depth = app.add_subcommand("depth", "layer counts against closed forms");
    auto *experiment = app.add_subcommand("experiment", "Monte-Carlo grid to CSV");
    auto *modularity = app.add_subcommand("modularity", "p with shift noise against 2p without");
    auto *fit = app.add_subcommand("fit", "fit p_L = p^(d/2) exp(c0 + c1 p + c2 p^2) to a results CSV");
    auto *oracle = app.add_subcommand("oracle", "cyclic layout against the dense sequential oracle");
    for (auto *sub : {catalog, compile, verify, depth, experiment, modularity, fit, oracle}) {
        common(sub);
    }
    std::string fit_input;
    fit->add_option("input", fit_input, "results CSV")->required()->check(CLI::ExistingFile);
    int instances = 200;
    oracle->add_option("--instances", instances, "random Pauli lists");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*catalog) {
            return cmd_catalog(r, *catalog);
        }
        if (*compile) {
            return cmd_compile(r, *compile);
        }
        if (*verify) {
            return cmd_verify(r, *verify);
        }
        if (*depth) {
            return cmd_depth(r, *depth);
        }
        if (*experiment) {
            return cmd_experiment(r, *experiment);
        }
        if (*modularity) {
            return cmd_modularity(r, *modularity);
        }
        if (*fit) {
            return cmd_fit(r, *fit, fit_input);
        }
        if (*oracle) {
            return cmd_oracle(r, *oracle, instances);
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
