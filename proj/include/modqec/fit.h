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

#ifndef MODQEC_FIT_H
#define MODQEC_FIT_H

#include <string>
#include <vector>

namespace modqec {

struct FitPoint {
    double p = 0;
    double p_L = 0;
};

/// p_L = p^(d/2) * exp(c0 + c1 p + c2 p^2)
struct FitResult {
    double c0 = 0;
    double c1 = 0;
    double c2 = 0;
    double residual_norm = 0;
    int d = 0;
    int points_used = 0;

    double predict(double p) const;
};

/// Least squares for ln(p_L) - (d/2) ln(p) against [1, p, p^2]. Points with p_L <= 0 are
/// skipped; fewer than three usable points or fewer than three distinct p values throw.
FitResult fit_curve(const std::vector<FitPoint> &points, int d);

struct ReferenceFit {
    std::string code;
    std::string layout;
    FitResult fit;
};

/// Fitted constants for the catalog codes under the sparse and flat layouts.
const std::vector<ReferenceFit> &reference_fits();
const ReferenceFit &reference_fit(const std::string &code, const std::string &layout);

}  // namespace modqec

#endif
