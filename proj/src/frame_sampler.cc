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

#include "modqec/frame_sampler.h"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "modqec/verify.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modqec {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

constexpr size_t W = kShotsPerBlock / 64;

class BlockSimulator {
   public:
    explicit BlockSimulator(const NoisyCircuit &circuit)
        : c_(circuit),
          x_(circuit.num_qubits() * W),
          z_(circuit.num_qubits() * W),
          rec_(circuit.num_measurements() * W) {}

    void run(uint64_t seed, uint64_t block) {
        rng_.seed(splitmix64(seed ^ splitmix64(block)));
        std::fill(x_.begin(), x_.end(), 0);
        std::fill(z_.begin(), z_.end(), 0);
        size_t m = 0;
        for (const auto &op : c_.ops()) {
            const auto &t = op.targets;
            switch (op.gate) {
                case CircuitGate::TICK:
                    break;
                case CircuitGate::R:
                case CircuitGate::RX:
                    for (int q : t) {
                        clear(q);
                    }
                    break;
                case CircuitGate::H:
                    for (int q : t) {
                        for (size_t w = 0; w < W; w++) {
                            std::swap(x_[q * W + w], z_[q * W + w]);
                        }
                    }
                    break;
                case CircuitGate::CX:
                    for (size_t k = 0; k + 1 < t.size(); k += 2) {
                        uint64_t *xc = &x_[t[k] * W], *zc = &z_[t[k] * W];
                        uint64_t *xt = &x_[t[k + 1] * W], *zt = &z_[t[k + 1] * W];
                        for (size_t w = 0; w < W; w++) {
                            xt[w] ^= xc[w];
                            zc[w] ^= zt[w];
                        }
                    }
                    break;
                case CircuitGate::CZ:
                    for (size_t k = 0; k + 1 < t.size(); k += 2) {
                        uint64_t *xa = &x_[t[k] * W], *za = &z_[t[k] * W];
                        uint64_t *xb = &x_[t[k + 1] * W], *zb = &z_[t[k + 1] * W];
                        for (size_t w = 0; w < W; w++) {
                            za[w] ^= xb[w];
                            zb[w] ^= xa[w];
                        }
                    }
                    break;
                case CircuitGate::CY:
                    for (size_t k = 0; k + 1 < t.size(); k += 2) {
                        uint64_t *xc = &x_[t[k] * W], *zc = &z_[t[k] * W];
                        uint64_t *xt = &x_[t[k + 1] * W], *zt = &z_[t[k + 1] * W];
                        for (size_t w = 0; w < W; w++) {
                            zc[w] ^= xt[w] ^ zt[w];
                            xt[w] ^= xc[w];
                            zt[w] ^= xc[w];
                        }
                    }
                    break;
                case CircuitGate::M:
                case CircuitGate::MX:
                case CircuitGate::MR:
                case CircuitGate::MRX: {
                    bool xb = op.gate == CircuitGate::MX || op.gate == CircuitGate::MRX;
                    bool reset = op.gate == CircuitGate::MR || op.gate == CircuitGate::MRX;
                    size_t first = m;
                    for (int q : t) {
                        const uint64_t *src = xb ? &z_[q * W] : &x_[q * W];
                        std::copy(src, src + W, &rec_[m * W]);
                        if (reset) {
                            clear(q);
                        }
                        m++;
                    }
                    if (op.arg > 0) {
                        for_each_hit(op.arg, t.size(), [&](size_t k, size_t s) {
                            rec_[(first + k) * W + s / 64] ^= uint64_t{1} << (s % 64);
                        });
                    }
                    break;
                }
                case CircuitGate::X_ERROR:
                    for_each_hit(op.arg, t.size(), [&](size_t k, size_t s) { flip(x_, t[k], s); });
                    break;
                case CircuitGate::Z_ERROR:
                    for_each_hit(op.arg, t.size(), [&](size_t k, size_t s) { flip(z_, t[k], s); });
                    break;
                case CircuitGate::DEPOLARIZE1:
                    for_each_hit(op.arg, t.size(), [&](size_t k, size_t s) { apply_pauli(t[k], s, pick(3)); });
                    break;
                case CircuitGate::DEPOLARIZE2:
                    for_each_hit(op.arg, t.size() / 2, [&](size_t k, size_t s) {
                        int pp = pick(15);
                        apply_pauli(t[2 * k], s, pp & 3);
                        apply_pauli(t[2 * k + 1], s, pp >> 2);
                    });
                    break;
            }
        }
    }

    /// XOR of the listed records for shot word w.
    uint64_t parity_word(const std::vector<int> &records, size_t w) const {
        uint64_t acc = 0;
        for (int r : records) {
            acc ^= rec_[r * W + w];
        }
        return acc;
    }

   private:
    void clear(int q) {
        std::fill(&x_[q * W], &x_[q * W] + W, 0);
        std::fill(&z_[q * W], &z_[q * W] + W, 0);
    }

    static void flip(std::vector<uint64_t> &v, int q, size_t s) { v[q * W + s / 64] ^= uint64_t{1} << (s % 64); }

    // 1 = X, 2 = Y, 3 = Z
    void apply_pauli(int q, size_t s, int pauli) {
        if (pauli == 1 || pauli == 2) {
            flip(x_, q, s);
        }
        if (pauli == 2 || pauli == 3) {
            flip(z_, q, s);
        }
    }

    int pick(int n) { return 1 + static_cast<int>(rng_() % static_cast<uint64_t>(n)); }

    template <typename F>
    void for_each_hit(double p, size_t num_targets, F &&hit) {
        if (p <= 0 || num_targets == 0) {
            return;
        }
        size_t total = num_targets * kShotsPerBlock;
        if (p >= 1) {
            for (size_t pos = 0; pos < total; pos++) {
                hit(pos / kShotsPerBlock, pos % kShotsPerBlock);
            }
            return;
        }
        std::geometric_distribution<uint64_t> gap(p);
        uint64_t pos = gap(rng_);
        while (pos < total) {
            hit(pos / kShotsPerBlock, pos % kShotsPerBlock);
            pos += gap(rng_) + 1;
        }
    }

    const NoisyCircuit &c_;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    std::vector<uint64_t> rec_;
    std::mt19937_64 rng_;
};

void copy_block(const BlockSimulator &sim, const NoisyCircuit &circuit, uint64_t block, ShotBatch &batch) {
    uint64_t begin = block * kShotsPerBlock;
    uint64_t count = std::min<uint64_t>(kShotsPerBlock, batch.shots - begin);
    const auto &dets = circuit.detectors();
    const auto &obs = circuit.observables();
    for (size_t w = 0; w * 64 < count; w++) {
        for (size_t d = 0; d < dets.size(); d++) {
            uint64_t word = sim.parity_word(dets[d], w);
            while (word) {
                size_t s = w * 64 + std::countr_zero(word);
                word &= word - 1;
                if (s < count) {
                    batch.detectors[begin + s].set(d, true);
                }
            }
        }
        for (size_t o = 0; o < obs.size(); o++) {
            uint64_t word = sim.parity_word(obs[o], w);
            while (word) {
                size_t s = w * 64 + std::countr_zero(word);
                word &= word - 1;
                if (s < count) {
                    batch.observables[begin + s].set(o, true);
                }
            }
        }
    }
}

ShotBatch prepare(const NoisyCircuit &circuit, uint64_t shots, uint64_t seed, const SampleOptions &opts) {
    if (!opts.assume_verified) {
        VerifyReport rep = verify_noiseless(circuit);
        if (!rep.ok()) {
            throw std::invalid_argument("cannot sample an unverified circuit: " + rep.problems.front());
        }
    }
    return ShotBatch::zeros(shots, static_cast<int>(circuit.detectors().size()),
                            static_cast<int>(circuit.observables().size()), seed);
}

}  // namespace

ShotBatch sample(const NoisyCircuit &circuit, uint64_t shots, uint64_t seed, const SampleOptions &opts) {
    ShotBatch batch = prepare(circuit, shots, seed, opts);
    long long blocks = static_cast<long long>((shots + kShotsPerBlock - 1) / kShotsPerBlock);
#ifdef _OPENMP
    int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
    {
        BlockSimulator sim(circuit);
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (long long b = 0; b < blocks; b++) {
            sim.run(seed, static_cast<uint64_t>(b));
            copy_block(sim, circuit, static_cast<uint64_t>(b), batch);
        }
    }
    return batch;
}

ShotBatch sample_serial(const NoisyCircuit &circuit, uint64_t shots, uint64_t seed, const SampleOptions &opts) {
    ShotBatch batch = prepare(circuit, shots, seed, opts);
    BlockSimulator sim(circuit);
    for (uint64_t b = 0; b * kShotsPerBlock < shots; b++) {
        sim.run(seed, b);
        copy_block(sim, circuit, b, batch);
    }
    return batch;
}

}  // namespace modqec
