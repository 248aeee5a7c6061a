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

#ifndef MODQEC_DECODER_H
#define MODQEC_DECODER_H

#include <cstdint>
#include <string>
#include <vector>

#include "modqec/dem.h"
#include "modqec/gf2.h"
#include "modqec/shot_batch.h"

namespace modqec {

enum class BpVariant { min_sum, product_sum };

struct DecoderConfig {
    int bp_iterations = 100;
    BpVariant variant = BpVariant::min_sum;
    double min_sum_scale = 0.8;
    /// Number of non-pivot columns swept exhaustively after the order-0 solution.
    int osd_order = 0;

    void validate() const;
    std::string describe() const;
};

struct DecodeResult {
    BitVec prediction;
    bool converged = false;
    /// Sum of log((1-p)/p) over the chosen mechanisms.
    double weight = 0;
    std::vector<int> mechanisms;
};

/// BP followed by ordered-statistics post-processing when BP's guess misses the syndrome.
/// An instance keeps scratch buffers, so share the model but not the decoder across threads.
class BpOsdDecoder {
   public:
    BpOsdDecoder(const DetectorErrorModel &dem, const DecoderConfig &cfg);

    DecodeResult decode(const BitVec &syndrome);
    size_t rank() const { return rank_; }

   private:
    bool run_bp(const BitVec &syndrome);
    std::vector<int> osd(const BitVec &syndrome);
    bool solve(const IncrementalBasis &basis, const std::vector<int> &pivots, BitVec s, std::vector<int> &out) const;
    DecodeResult finish(const std::vector<int> &chosen, bool converged) const;

    const DetectorErrorModel &dem_;
    DecoderConfig cfg_;
    size_t nd_;
    size_t nm_;
    size_t rank_ = 0;
    std::vector<double> prior_;
    std::vector<BitVec> columns_;
    // Tanner graph, one edge per (detector, mechanism) incidence.
    std::vector<int> edge_check_;
    std::vector<int> edge_var_;
    std::vector<std::vector<int>> check_edges_;
    std::vector<std::vector<int>> var_edges_;
    std::vector<double> q_;
    std::vector<double> r_;
    std::vector<double> posterior_;
    std::vector<uint8_t> hard_;
};

DecodeResult decode(const DetectorErrorModel &dem, const BitVec &events, const DecoderConfig &cfg = {});

struct BatchDecodeResult {
    uint64_t failures = 0;
    std::vector<uint8_t> failed;
    uint64_t bp_converged = 0;
};

/// A shot fails when any predicted observable differs from the recorded flip.
BatchDecodeResult decode_batch(const DetectorErrorModel &dem, const ShotBatch &batch, const DecoderConfig &cfg = {},
                               int threads = 0);
BatchDecodeResult decode_batch_serial(const DetectorErrorModel &dem, const ShotBatch &batch,
                                      const DecoderConfig &cfg = {});

}  // namespace modqec

#endif
