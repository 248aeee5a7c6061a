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

#include "modqec/experiment.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <stdexcept>

#include "modqec/catalog.h"
#include "modqec/dem.h"
#include "modqec/frame_sampler.h"
#include "modqec/memory.h"
#include "modqec/verify.h"

namespace modqec {

void ExperimentSpec::validate() const {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    for (double v : p) {
        if (!(v >= 0 && v < 1)) {
            throw std::invalid_argument("p values must lie in [0, 1)");
        }
    }
    if (tau_s < 0 || tau_m < 0) {
        throw std::invalid_argument("tau_s and tau_m must be non-negative");
    }
    if (rounds < 0) {
        throw std::invalid_argument("rounds must be non-negative");
    }
    decoder.validate();
}

Interval wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) {
        throw std::invalid_argument("wilson interval needs n > 0");
    }
    double nn = static_cast<double>(n);
    double ph = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (ph + z2 / (2 * nn)) / denom;
    double half = z / denom * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn));
    return Interval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

double per_round_rate(double total, int T) {
    if (T < 1) {
        throw std::invalid_argument("T must be at least 1");
    }
    if (total >= 1) {
        return 1;
    }
    return 1 - std::pow(1 - total, 1.0 / T);
}

uint64_t derive_seed(const ExperimentSpec &spec, double p) {
    std::string key = spec.code + "|" + layout_name(spec.layout) + "|" + basis_name(spec.basis) + "|" +
                      std::to_string(p) + "|" + std::to_string(spec.tau_s) + "|" + std::to_string(spec.tau_m) + "|" +
                      std::to_string(spec.rounds);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : key) {
        h = (h ^ ch) * 0x100000001b3ULL;
    }
    return splitmix64(spec.seed ^ h);
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

LogicalErrorEstimate run_memory_experiment(const ExperimentSpec &spec, double p) {
    spec.validate();
    BBCode code = spec.catalog_path.empty() ? find_code(spec.code) : find_code(spec.code, spec.catalog_path);
    int T = spec.rounds > 0 ? spec.rounds : code.known_distance.value_or(0);
    if (T < 1) {
        throw std::invalid_argument("code " + spec.code + " has no known distance; pass rounds explicitly");
    }
    NoiseModel noise{p, spec.tau_m, spec.tau_s};
    MemoryOptions mopts;
    mopts.both_check_types = spec.both_check_types;
    mopts.parallelism = spec.parallelism;
    MemoryExperiment ex = build_memory_experiment(code, spec.layout, spec.basis, T, noise, mopts);
    VerifyReport rep = verify_noiseless(ex.circuit);
    if (!rep.ok()) {
        throw std::runtime_error("memory circuit failed verification: " + rep.problems.front());
    }
    DetectorErrorModel dem = detector_error_model(ex.circuit);
    SampleOptions sopts;
    sopts.assume_verified = true;
    sopts.threads = spec.threads;
    ShotBatch batch = sample(ex.circuit, spec.shots, derive_seed(spec, p), sopts);
    BatchDecodeResult dec = decode_batch(dem, batch, spec.decoder, spec.threads);

    LogicalErrorEstimate est;
    est.code = code.name;
    est.layout = layout_name(spec.layout);
    est.basis = basis_name(spec.basis);
    est.p = p;
    est.tau_s = spec.tau_s;
    est.tau_m = spec.tau_m;
    est.T = T;
    est.shots = spec.shots;
    est.failures = dec.failures;
    est.p_fail_total = static_cast<double>(dec.failures) / static_cast<double>(spec.shots);
    est.p_L_round = per_round_rate(est.p_fail_total, T);
    Interval ci = wilson_interval(dec.failures, spec.shots);
    est.ci_low = per_round_rate(ci.low, T);
    est.ci_high = per_round_rate(ci.high, T);
    est.seed = spec.seed;
    est.decoder = spec.decoder.describe();
    est.timestamp = utc_timestamp();
    return est;
}

std::vector<LogicalErrorEstimate> run_experiment_grid(const ExperimentSpec &spec) {
    std::vector<LogicalErrorEstimate> out;
    for (double p : spec.p) {
        out.push_back(run_memory_experiment(spec, p));
    }
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::confirmed:
            return "confirmed";
        case Verdict::refuted:
            return "refuted";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "?";
}

Verdict compare_intervals(const LogicalErrorEstimate &lower, const LogicalErrorEstimate &upper) {
    if (lower.failures == 0 && upper.failures == 0) {
        return Verdict::inconclusive;
    }
    if (lower.ci_high < upper.ci_low) {
        return Verdict::confirmed;
    }
    if (upper.ci_high < lower.ci_low) {
        return Verdict::refuted;
    }
    return Verdict::inconclusive;
}

ModularityReport modularity_comparison(const ExperimentSpec &spec, double p) {
    if (!(p > 0 && 2 * p < 1)) {
        throw std::invalid_argument("modularity comparison needs 0 < p and 2p < 1");
    }
    ModularityReport rep;
    rep.with_shift_noise = run_memory_experiment(spec, p);
    ExperimentSpec quiet = spec;
    quiet.tau_s = 0;
    rep.doubled_without_shift_noise = run_memory_experiment(quiet, 2 * p);
    rep.verdict = compare_intervals(rep.with_shift_noise, rep.doubled_without_shift_noise);
    return rep;
}

}  // namespace modqec
