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

#include "modqec/shot_batch.h"

#include <filesystem>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

using namespace modqec;

static ShotBatch random_batch(uint64_t shots, int nd, int no, uint64_t seed) {
    std::mt19937_64 rng(seed);
    ShotBatch b = ShotBatch::zeros(shots, nd, no, seed);
    for (uint64_t s = 0; s < shots; s++) {
        for (int d = 0; d < nd; d++) {
            b.detectors[s].set(d, rng() & 1);
        }
        for (int o = 0; o < no; o++) {
            b.observables[s].set(o, rng() & 1);
        }
    }
    return b;
}

TEST(ShotBatch, exact_bytes) {
    ShotBatch b = ShotBatch::zeros(1, 10, 1, 0x0102030405060708ULL);
    b.detectors[0].set(0, true);
    b.detectors[0].set(9, true);
    b.observables[0].set(0, true);
    std::stringstream ss;
    write_shot_batch(ss, b);
    std::string bytes = ss.str();
    std::string want = std::string("MQSB") + std::string("\x01\x00\x00\x00", 4) +
                       std::string("\x01\x00\x00\x00\x00\x00\x00\x00", 8) + std::string("\x0a\x00\x00\x00", 4) +
                       std::string("\x01\x00\x00\x00", 4) + std::string("\x08\x07\x06\x05\x04\x03\x02\x01", 8) +
                       std::string("\x01\x02\x01", 3);
    EXPECT_EQ(bytes, want);
}

TEST(ShotBatch, round_trip) {
    for (auto [nd, no] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {13, 12}, {216, 12}}) {
        ShotBatch b = random_batch(37, nd, no, 5);
        std::stringstream ss;
        write_shot_batch(ss, b);
        EXPECT_EQ(read_shot_batch(ss), b);
    }
}

TEST(ShotBatch, file_round_trip) {
    auto path = std::filesystem::temp_directory_path() / "modqec_shot_batch_test.bin";
    ShotBatch b = random_batch(100, 50, 3, 8);
    save_shot_batch(path.string(), b);
    EXPECT_EQ(load_shot_batch(path.string()), b);
    std::filesystem::remove(path);
    EXPECT_THROW(load_shot_batch(path.string()), std::runtime_error);
}

TEST(ShotBatch, rejects_bad_input) {
    std::stringstream bad_magic("XXXX");
    EXPECT_THROW(read_shot_batch(bad_magic), std::runtime_error);
    ShotBatch b = random_batch(4, 9, 2, 1);
    std::stringstream ss;
    write_shot_batch(ss, b);
    std::string text = ss.str();
    std::stringstream truncated(text.substr(0, text.size() - 1));
    EXPECT_THROW(read_shot_batch(truncated), std::runtime_error);
    text[4] = 2;
    std::stringstream version(text);
    EXPECT_THROW(read_shot_batch(version), std::runtime_error);
}
