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

#ifndef MODQEC_EXPERIMENT_H
#define MODQEC_EXPERIMENT_H

#include <cstdint>
#include <string>
#include <vector>

#include "modqec/codes.h"
#include "modqec/decoder.h"
#include "modqec/layouts.h"
#include "modqec/machine.h"

namespace modqec {

struct ExperimentSpec {
    std::string code = "bb72";
    Layout layout = Layout::sparse;
    Basis basis = Basis::Z;
    std::vector<double> p = {1e-3, 2e-3, 3e-3, 5e-3, 7e-3, 1e-2};
    int tau_s = 30;
    int tau_m = 30;
    /// 0 means the code distance.
    int rounds = 0;
    uint64_t shots = 10000;
    uint64_t seed = 1;
    DecoderConfig decoder;
    Parallelism parallelism = Parallelism::chain;
    /// Detectors for the other check type too; decoding uses only the memory type by default.
    bool both_check_types = false;
    std::string catalog_path;
    int threads = 0;

    void validate() const;
};

struct LogicalErrorEstimate {
    std::string code;
    std::string layout;
    std::string basis;
    double p = 0;
    int tau_s = 0;
    int tau_m = 0;
    int T = 0;
    uint64_t shots = 0;
    uint64_t failures = 0;
    double p_fail_total = 0;
    double p_L_round = 0;
    double ci_low = 0;
    double ci_high = 0;
    uint64_t seed = 0;
    std::string decoder;
    std::string timestamp;
};

struct Interval {
    double low = 0;
    double high = 0;
};

/// 95% Wilson score interval for k successes in n trials.
Interval wilson_interval(uint64_t k, uint64_t n, double z = 1.959963984540054);

/// 1 - (1 - P)^(1/T)
double per_round_rate(double total, int T);

/// Seed for one grid point, derived from the master seed and the point's settings.
uint64_t derive_seed(const ExperimentSpec &spec, double p);

/// Compiles, lowers, verifies, samples and decodes one grid point.
LogicalErrorEstimate run_memory_experiment(const ExperimentSpec &spec, double p);
std::vector<LogicalErrorEstimate> run_experiment_grid(const ExperimentSpec &spec);

enum class Verdict { confirmed, refuted, inconclusive };
std::string verdict_name(Verdict v);

struct ModularityReport {
    LogicalErrorEstimate with_shift_noise;
    LogicalErrorEstimate doubled_without_shift_noise;
    Verdict verdict = Verdict::inconclusive;
};

/// Compares (p, tau_s from spec) against (2p, tau_s = 0). Confirmed only when the 95%
/// intervals are disjoint with the first below the second.
ModularityReport modularity_comparison(const ExperimentSpec &spec, double p);
Verdict compare_intervals(const LogicalErrorEstimate &lower, const LogicalErrorEstimate &upper);

std::string utc_timestamp();

}  // namespace modqec

#endif
