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

#ifndef MODQEC_DEM_H
#define MODQEC_DEM_H

#include <iosfwd>
#include <vector>

#include "modqec/circuit.h"

namespace modqec {

struct ErrorMechanism {
    double p = 0;
    std::vector<int> detectors;
    std::vector<int> observables;
};

struct DetectorErrorModel {
    int num_detectors = 0;
    int num_observables = 0;
    /// Sorted by (detectors, observables); signatures are unique.
    std::vector<ErrorMechanism> mechanisms;
};

/// XOR-combination of two independent events.
double merge_probability(double p1, double p2);

/// Enumerates every elementary fault, drops the ones that flip nothing and merges equal
/// signatures. Throws if the noiseless circuit has a random detector or observable.
DetectorErrorModel detector_error_model(const NoisyCircuit &circuit);

/// Builds a model from raw mechanisms, merging duplicates.
DetectorErrorModel make_dem(int num_detectors, int num_observables, const std::vector<ErrorMechanism> &raw);

void write_dem(std::ostream &out, const DetectorErrorModel &dem);

}  // namespace modqec

#endif
