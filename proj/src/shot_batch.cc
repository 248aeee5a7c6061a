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

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace modqec {

namespace {

constexpr char kMagic[4] = {'M', 'Q', 'S', 'B'};
constexpr uint32_t kVersion = 1;

template <typename T>
void put(std::ostream &out, T v) {
    unsigned char buf[sizeof(T)];
    for (size_t k = 0; k < sizeof(T); k++) {
        buf[k] = static_cast<unsigned char>((static_cast<uint64_t>(v) >> (8 * k)) & 0xff);
    }
    out.write(reinterpret_cast<const char *>(buf), sizeof(T));
}

template <typename T>
T get(std::istream &in) {
    unsigned char buf[sizeof(T)];
    if (!in.read(reinterpret_cast<char *>(buf), sizeof(T))) {
        throw std::runtime_error("truncated shot batch");
    }
    uint64_t v = 0;
    for (size_t k = 0; k < sizeof(T); k++) {
        v |= uint64_t{buf[k]} << (8 * k);
    }
    return static_cast<T>(v);
}

void put_bits(std::ostream &out, const BitVec &bits) {
    std::vector<char> bytes((bits.size() + 7) / 8, 0);
    for (size_t k : bits.ones()) {
        bytes[k / 8] = static_cast<char>(bytes[k / 8] | (1 << (k % 8)));
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

BitVec get_bits(std::istream &in, size_t n) {
    std::vector<char> bytes((n + 7) / 8);
    if (!in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
        throw std::runtime_error("truncated shot batch");
    }
    BitVec out(n);
    for (size_t k = 0; k < n; k++) {
        if ((bytes[k / 8] >> (k % 8)) & 1) {
            out.set(k, true);
        }
    }
    return out;
}

}  // namespace

ShotBatch ShotBatch::zeros(uint64_t shots, int num_detectors, int num_observables, uint64_t seed) {
    ShotBatch b;
    b.shots = shots;
    b.num_detectors = num_detectors;
    b.num_observables = num_observables;
    b.seed = seed;
    b.detectors.assign(shots, BitVec(num_detectors));
    b.observables.assign(shots, BitVec(num_observables));
    return b;
}

void write_shot_batch(std::ostream &out, const ShotBatch &batch) {
    out.write(kMagic, 4);
    put<uint32_t>(out, kVersion);
    put<uint64_t>(out, batch.shots);
    put<uint32_t>(out, static_cast<uint32_t>(batch.num_detectors));
    put<uint32_t>(out, static_cast<uint32_t>(batch.num_observables));
    put<uint64_t>(out, batch.seed);
    for (uint64_t s = 0; s < batch.shots; s++) {
        put_bits(out, batch.detectors[s]);
        put_bits(out, batch.observables[s]);
    }
    if (!out) {
        throw std::runtime_error("failed writing shot batch");
    }
}

ShotBatch read_shot_batch(std::istream &in) {
    char magic[4];
    if (!in.read(magic, 4) || std::string(magic, 4) != std::string(kMagic, 4)) {
        throw std::runtime_error("not a shot batch (bad magic)");
    }
    if (get<uint32_t>(in) != kVersion) {
        throw std::runtime_error("unsupported shot batch version");
    }
    uint64_t shots = get<uint64_t>(in);
    int nd = static_cast<int>(get<uint32_t>(in));
    int no = static_cast<int>(get<uint32_t>(in));
    uint64_t seed = get<uint64_t>(in);
    ShotBatch b;
    b.shots = shots;
    b.num_detectors = nd;
    b.num_observables = no;
    b.seed = seed;
    for (uint64_t s = 0; s < shots; s++) {
        b.detectors.push_back(get_bits(in, nd));
        b.observables.push_back(get_bits(in, no));
    }
    return b;
}

void save_shot_batch(const std::string &path, const ShotBatch &batch) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    write_shot_batch(out, batch);
}

ShotBatch load_shot_batch(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_shot_batch(in);
}

}  // namespace modqec
