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

#ifndef MODQEC_SHOT_BATCH_H
#define MODQEC_SHOT_BATCH_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modqec/gf2.h"

namespace modqec {

struct ShotBatch {
    uint64_t shots = 0;
    int num_detectors = 0;
    int num_observables = 0;
    uint64_t seed = 0;
    /// One row per shot.
    std::vector<BitVec> detectors;
    std::vector<BitVec> observables;

    static ShotBatch zeros(uint64_t shots, int num_detectors, int num_observables, uint64_t seed);
    bool operator==(const ShotBatch &) const = default;
};

/// Binary layout, little-endian: "MQSB", u32 version (1), u64 shots, u32 detectors,
/// u32 observables, u64 seed, then per shot ceil(detectors/8) bytes and ceil(observables/8)
/// bytes with bit k stored in byte k/8 at position k%8.
void write_shot_batch(std::ostream &out, const ShotBatch &batch);
ShotBatch read_shot_batch(std::istream &in);
void save_shot_batch(const std::string &path, const ShotBatch &batch);
ShotBatch load_shot_batch(const std::string &path);

}  // namespace modqec

#endif
