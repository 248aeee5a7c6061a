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

#include "modqec/decoder.h"

#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "modqec/frame_sampler.h"
#include "modqec/memory.h"

using namespace modqec;

// Bits b0 b1 b2 each flip with probability p; D0 = b0^b1, D1 = b1^b2, L0 = b0.
static DetectorErrorModel repetition_dem(double p) {
    return make_dem(2, 1, {{p, {0}, {0}}, {p, {0, 1}, {}}, {p, {1}, {}}});
}

static DetectorErrorModel toy_dem() {
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
    return make_dem(12, 2, raw);
}

static BitVec syndrome_of(const DetectorErrorModel &dem, const std::vector<int> &mechs) {
    BitVec s(dem.num_detectors);
    for (int j : mechs) {
        for (int d : dem.mechanisms[j].detectors) {
            s.flip(d);
        }
    }
    return s;
}

TEST(Decoder, repetition_code_is_maximum_likelihood) {
    double p = 0.1;
    DetectorErrorModel dem = repetition_dem(p);
    // Mechanism order after sorting: {D0 L0}=b0, {D0 D1}=b1, {D1}=b2.
    for (BpVariant variant : {BpVariant::min_sum, BpVariant::product_sum}) {
        DecoderConfig cfg;
        cfg.variant = variant;
        double fail = 0;
        for (int pattern = 0; pattern < 8; pattern++) {
            std::vector<int> mechs;
            int flips = 0;
            for (int j = 0; j < 3; j++) {
                if ((pattern >> j) & 1) {
                    mechs.push_back(j);
                    flips++;
                }
            }
            BitVec obs(1);
            for (int j : mechs) {
                for (int o : dem.mechanisms[j].observables) {
                    obs.flip(o);
                }
            }
            DecodeResult r = decode(dem, syndrome_of(dem, mechs), cfg);
            if (!(r.prediction == obs)) {
                fail += std::pow(p, flips) * std::pow(1 - p, 3 - flips);
            }
        }
        EXPECT_NEAR(fail, 0.028, 1e-12);
    }
}

TEST(Decoder, recovers_every_single_mechanism) {
    DetectorErrorModel dem = toy_dem();
    ASSERT_EQ(dem.mechanisms.size(), 20u);
    for (int order : {0, 4}) {
        DecoderConfig cfg;
        cfg.osd_order = order;
        BpOsdDecoder dec(dem, cfg);
        for (int j = 0; j < 20; j++) {
            DecodeResult r = dec.decode(syndrome_of(dem, {j}));
            EXPECT_EQ(r.mechanisms, std::vector<int>{j}) << "mechanism " << j;
            BitVec obs(2);
            for (int o : dem.mechanisms[j].observables) {
                obs.flip(o);
            }
            EXPECT_EQ(r.prediction, obs);
            EXPECT_NEAR(r.weight, std::log((1 - dem.mechanisms[j].p) / dem.mechanisms[j].p), 1e-12);
        }
    }
}

TEST(Decoder, osd_always_satisfies_the_syndrome) {
    DetectorErrorModel dem = toy_dem();
    std::mt19937_64 rng(4);
    DecoderConfig cfg;
    cfg.bp_iterations = 1;
    BpOsdDecoder dec(dem, cfg);
    for (int trial = 0; trial < 200; trial++) {
        std::vector<int> mechs;
        for (int j = 0; j < 20; j++) {
            if (rng() % 4 == 0) {
                mechs.push_back(j);
            }
        }
        BitVec s = syndrome_of(dem, mechs);
        DecodeResult r = dec.decode(s);
        EXPECT_EQ(syndrome_of(dem, r.mechanisms), s);
    }
}

TEST(Decoder, empty_syndrome_and_config_checks) {
    DetectorErrorModel dem = repetition_dem(0.1);
    DecodeResult r = decode(dem, BitVec(2));
    EXPECT_TRUE(r.converged);
    EXPECT_TRUE(r.mechanisms.empty());
    EXPECT_THROW(decode(dem, BitVec(3)), std::invalid_argument);
    DecoderConfig cfg;
    EXPECT_EQ(cfg.describe(), "bposd-ms0.8-it100-osd0");
    cfg.variant = BpVariant::product_sum;
    cfg.osd_order = 7;
    EXPECT_EQ(cfg.describe(), "bposd-ps-it100-osd7");
    cfg.min_sum_scale = 0;
    cfg.variant = BpVariant::min_sum;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = DecoderConfig{};
    cfg.bp_iterations = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    DetectorErrorModel bad = make_dem(1, 0, {{1.5, {0}, {}}});
    EXPECT_THROW(BpOsdDecoder(bad, DecoderConfig{}), std::invalid_argument);
}

TEST(Decoder, batch_parallel_equals_serial) {
    RingParams params(3, 3);
    BBCode code = build_bb_code(params, BivariatePolynomial(params, {{0, 0}, {1, 0}}),
                                BivariatePolynomial(params, {{0, 0}, {0, 1}}), 3);
    MemoryExperiment ex = build_memory_experiment(code, Layout::sparse, Basis::Z, 3, NoiseModel{5e-3});
    DetectorErrorModel dem = detector_error_model(ex.circuit);
    ShotBatch batch = sample(ex.circuit, 3000, 2);
    BatchDecodeResult a = decode_batch(dem, batch, {}, 4);
    BatchDecodeResult b = decode_batch_serial(dem, batch);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.failed, b.failed);
    EXPECT_EQ(a.bp_converged, b.bp_converged);
    EXPECT_LT(a.failures, batch.shots / 10);
    ShotBatch wrong = ShotBatch::zeros(1, 3, 1, 0);
    EXPECT_THROW(decode_batch(dem, wrong), std::invalid_argument);
}
