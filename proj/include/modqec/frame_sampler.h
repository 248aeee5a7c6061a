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

#ifndef MODQEC_FRAME_SAMPLER_H
#define MODQEC_FRAME_SAMPLER_H

#include <cstdint>

#include "modqec/circuit.h"
#include "modqec/shot_batch.h"

namespace modqec {

/// Shots are simulated in blocks of this many, each block with its own random stream
/// derived from (seed, block index).
constexpr uint64_t kShotsPerBlock = 1024;

struct SampleOptions {
    /// Skip the noiseless determinism check.
    bool assume_verified = false;
    /// 0 uses the OpenMP default.
    int threads = 0;
};

/// Pauli-frame sampling of detection events and observable flips, parallel over blocks.
ShotBatch sample(const NoisyCircuit &circuit, uint64_t shots, uint64_t seed, const SampleOptions &opts = {});

/// Same blocks and streams as sample(), run on one thread.
ShotBatch sample_serial(const NoisyCircuit &circuit, uint64_t shots, uint64_t seed,
                        const SampleOptions &opts = {});

uint64_t splitmix64(uint64_t x);

}  // namespace modqec

#endif
