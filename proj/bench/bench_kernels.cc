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

#include <benchmark/benchmark.h>

#include "modqec/catalog.h"
#include "modqec/decoder.h"
#include "modqec/dem.h"
#include "modqec/frame_sampler.h"
#include "modqec/memory.h"

using namespace modqec;

namespace {

struct Fixture {
    MemoryExperiment ex;
    DetectorErrorModel dem;
    ShotBatch batch;
};

const Fixture &fixture() {
    static const Fixture f = [] {
        MemoryOptions opts;
        opts.both_check_types = false;
        opts.parallelism = Parallelism::chain;
        Fixture out;
        out.ex = build_memory_experiment(find_code("bb72"), Layout::sparse, Basis::Z, 6, NoiseModel{3e-3, 30, 30}, opts);
        out.dem = detector_error_model(out.ex.circuit);
        out.batch = sample(out.ex.circuit, 512, 1, {true, 0});
        return out;
    }();
    return f;
}

void BM_sample(benchmark::State &state) {
    const Fixture &f = fixture();
    SampleOptions opts{true, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(f.ex.circuit, state.range(0), 1, opts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sample_serial(benchmark::State &state) {
    const Fixture &f = fixture();
    SampleOptions opts{true, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_serial(f.ex.circuit, state.range(0), 1, opts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_decode_batch(benchmark::State &state) {
    const Fixture &f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_batch(f.dem, f.batch));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.batch.shots));
}

void BM_decode_batch_serial(benchmark::State &state) {
    const Fixture &f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_batch_serial(f.dem, f.batch));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.batch.shots));
}

}  // namespace

BENCHMARK(BM_sample)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_serial)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decode_batch)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decode_batch_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
