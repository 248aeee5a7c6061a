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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modqec {

namespace {

constexpr double kMaxLlr = 40;

double clamp_llr(double v) { return std::clamp(v, -kMaxLlr, kMaxLlr); }

}  // namespace

void DecoderConfig::validate() const {
    if (bp_iterations < 1) {
        throw std::invalid_argument("bp_iterations must be at least 1");
    }
    if (!(min_sum_scale > 0 && min_sum_scale <= 1)) {
        throw std::invalid_argument("min_sum_scale must lie in (0, 1]");
    }
    if (osd_order < 0 || osd_order > 16) {
        throw std::invalid_argument("osd_order must lie in [0, 16]");
    }
}

std::string DecoderConfig::describe() const {
    std::stringstream ss;
    ss << "bposd-";
    if (variant == BpVariant::min_sum) {
        ss << "ms" << min_sum_scale;
    } else {
        ss << "ps";
    }
    ss << "-it" << bp_iterations << "-osd" << osd_order;
    return ss.str();
}

BpOsdDecoder::BpOsdDecoder(const DetectorErrorModel &dem, const DecoderConfig &cfg)
    : dem_(dem), cfg_(cfg), nd_(dem.num_detectors), nm_(dem.mechanisms.size()) {
    cfg_.validate();
    check_edges_.resize(nd_);
    var_edges_.resize(nm_);
    prior_.resize(nm_);
    columns_.assign(nm_, BitVec(nd_));
    IncrementalBasis full(nd_, 0);
    for (size_t j = 0; j < nm_; j++) {
        const auto &mech = dem.mechanisms[j];
        if (!(mech.p > 0 && mech.p < 1)) {
            throw std::invalid_argument("mechanism probability outside (0, 1)");
        }
        prior_[j] = clamp_llr(std::log((1 - mech.p) / mech.p));
        for (int d : mech.detectors) {
            if (d < 0 || static_cast<size_t>(d) >= nd_) {
                throw std::out_of_range("mechanism detector out of range");
            }
            int e = static_cast<int>(edge_check_.size());
            edge_check_.push_back(d);
            edge_var_.push_back(static_cast<int>(j));
            check_edges_[d].push_back(e);
            var_edges_[j].push_back(e);
            columns_[j].set(d, true);
        }
        full.insert(columns_[j], j);
    }
    rank_ = full.rank();
    q_.resize(edge_check_.size());
    r_.resize(edge_check_.size());
    posterior_.resize(nm_);
    hard_.resize(nm_);
}

bool BpOsdDecoder::run_bp(const BitVec &syndrome) {
    for (size_t e = 0; e < q_.size(); e++) {
        q_[e] = prior_[edge_var_[e]];
    }
    for (int it = 0; it < cfg_.bp_iterations; it++) {
        for (size_t i = 0; i < nd_; i++) {
            const auto &edges = check_edges_[i];
            double sign0 = syndrome.get(i) ? -1.0 : 1.0;
            if (cfg_.variant == BpVariant::min_sum) {
                double min1 = std::numeric_limits<double>::infinity();
                double min2 = min1;
                int arg_min = -1;
                double sign = sign0;
                for (int e : edges) {
                    double a = std::fabs(q_[e]);
                    if (q_[e] < 0) {
                        sign = -sign;
                    }
                    if (a < min1) {
                        min2 = min1;
                        min1 = a;
                        arg_min = e;
                    } else if (a < min2) {
                        min2 = a;
                    }
                }
                for (int e : edges) {
                    double s = q_[e] < 0 ? -sign : sign;
                    double mag = e == arg_min ? min2 : min1;
                    if (std::isinf(mag)) {
                        mag = kMaxLlr;
                    }
                    r_[e] = cfg_.min_sum_scale * s * mag;
                }
            } else {
                double prod = sign0;
                int zeros = 0;
                for (int e : edges) {
                    double t = std::tanh(q_[e] / 2);
                    if (t == 0) {
                        zeros++;
                    } else {
                        prod *= t;
                    }
                }
                for (int e : edges) {
                    double t = std::tanh(q_[e] / 2);
                    double v;
                    if (t == 0) {
                        v = zeros > 1 ? 0 : prod;
                    } else {
                        v = zeros > 0 ? 0 : prod / t;
                    }
                    v = std::clamp(v, -1 + 1e-15, 1 - 1e-15);
                    r_[e] = clamp_llr(2 * std::atanh(v));
                }
            }
        }
        for (size_t j = 0; j < nm_; j++) {
            double total = prior_[j];
            for (int e : var_edges_[j]) {
                total += r_[e];
            }
            posterior_[j] = total;
            hard_[j] = total < 0;
            for (int e : var_edges_[j]) {
                q_[e] = clamp_llr(total - r_[e]);
            }
        }
        bool ok = true;
        for (size_t i = 0; i < nd_ && ok; i++) {
            bool parity = false;
            for (int e : check_edges_[i]) {
                parity ^= hard_[edge_var_[e]] != 0;
            }
            ok = parity == syndrome.get(i);
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

bool BpOsdDecoder::solve(const IncrementalBasis &basis, const std::vector<int> &pivots, BitVec s,
                         std::vector<int> &out) const {
    BitVec combo(nd_);
    if (!basis.reduce(s, &combo)) {
        return false;
    }
    out.clear();
    for (size_t k : combo.ones()) {
        out.push_back(pivots[k]);
    }
    return true;
}

std::vector<int> BpOsdDecoder::osd(const BitVec &syndrome) {
    std::vector<int> order(nm_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return posterior_[a] < posterior_[b]; });
    IncrementalBasis basis(nd_, nd_);
    std::vector<int> pivots;
    std::vector<int> others;
    size_t k = 0;
    for (; k < order.size() && pivots.size() < rank_; k++) {
        int j = order[k];
        if (basis.insert(columns_[j], pivots.size())) {
            pivots.push_back(j);
        } else {
            others.push_back(j);
        }
    }
    for (; k < order.size() && others.size() < static_cast<size_t>(cfg_.osd_order); k++) {
        others.push_back(order[k]);
    }
    std::vector<int> best;
    if (!solve(basis, pivots, syndrome, best)) {
        throw std::logic_error("syndrome is outside the column space of the error model");
    }
    auto cost = [&](const std::vector<int> &chosen) {
        double w = 0;
        for (int j : chosen) {
            w += prior_[j];
        }
        return w;
    };
    double best_cost = cost(best);
    size_t lambda = std::min<size_t>(cfg_.osd_order, others.size());
    std::vector<int> candidate;
    for (uint64_t mask = 1; mask < (uint64_t{1} << lambda); mask++) {
        BitVec s = syndrome;
        std::vector<int> flipped;
        for (size_t t = 0; t < lambda; t++) {
            if ((mask >> t) & 1) {
                s ^= columns_[others[t]];
                flipped.push_back(others[t]);
            }
        }
        if (!solve(basis, pivots, s, candidate)) {
            continue;
        }
        candidate.insert(candidate.end(), flipped.begin(), flipped.end());
        double c = cost(candidate);
        if (c < best_cost) {
            best_cost = c;
            best = candidate;
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

DecodeResult BpOsdDecoder::finish(const std::vector<int> &chosen, bool converged) const {
    DecodeResult res;
    res.prediction = BitVec(dem_.num_observables);
    res.converged = converged;
    res.mechanisms = chosen;
    for (int j : chosen) {
        res.weight += prior_[j];
        for (int o : dem_.mechanisms[j].observables) {
            res.prediction.flip(o);
        }
    }
    return res;
}

DecodeResult BpOsdDecoder::decode(const BitVec &syndrome) {
    if (syndrome.size() != nd_) {
        throw std::invalid_argument("syndrome length " + std::to_string(syndrome.size()) + " does not match " +
                                    std::to_string(nd_) + " detectors");
    }
    if (syndrome.none()) {
        return finish({}, true);
    }
    if (run_bp(syndrome)) {
        std::vector<int> chosen;
        for (size_t j = 0; j < nm_; j++) {
            if (hard_[j]) {
                chosen.push_back(static_cast<int>(j));
            }
        }
        return finish(chosen, true);
    }
    return finish(osd(syndrome), false);
}

DecodeResult decode(const DetectorErrorModel &dem, const BitVec &events, const DecoderConfig &cfg) {
    BpOsdDecoder dec(dem, cfg);
    return dec.decode(events);
}

namespace {

void check_batch(const DetectorErrorModel &dem, const ShotBatch &batch) {
    if (batch.num_detectors != dem.num_detectors || batch.num_observables != dem.num_observables) {
        throw std::invalid_argument("shot batch dimensions do not match the error model");
    }
}

}  // namespace

BatchDecodeResult decode_batch(const DetectorErrorModel &dem, const ShotBatch &batch, const DecoderConfig &cfg,
                               int threads) {
    check_batch(dem, batch);
    BatchDecodeResult out;
    out.failed.assign(batch.shots, 0);
    long long shots = static_cast<long long>(batch.shots);
    uint64_t failures = 0;
    uint64_t converged = 0;
#ifdef _OPENMP
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt) reduction(+ : failures, converged)
#else
    (void)threads;
#endif
    {
        BpOsdDecoder dec(dem, cfg);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
        for (long long s = 0; s < shots; s++) {
            DecodeResult r = dec.decode(batch.detectors[s]);
            bool fail = !(r.prediction == batch.observables[s]);
            out.failed[s] = fail;
            failures += fail;
            converged += r.converged;
        }
    }
    out.failures = failures;
    out.bp_converged = converged;
    return out;
}

BatchDecodeResult decode_batch_serial(const DetectorErrorModel &dem, const ShotBatch &batch,
                                      const DecoderConfig &cfg) {
    check_batch(dem, batch);
    BatchDecodeResult out;
    out.failed.assign(batch.shots, 0);
    BpOsdDecoder dec(dem, cfg);
    for (uint64_t s = 0; s < batch.shots; s++) {
        DecodeResult r = dec.decode(batch.detectors[s]);
        bool fail = !(r.prediction == batch.observables[s]);
        out.failed[s] = fail;
        out.failures += fail;
        out.bp_converged += r.converged;
    }
    return out;
}

}  // namespace modqec
