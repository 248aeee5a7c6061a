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

#include "modqec/fit.h"

#include <Eigen/Dense>
#include <cmath>
#include <set>
#include <stdexcept>

namespace modqec {

double FitResult::predict(double p) const { return std::pow(p, d / 2.0) * std::exp(c0 + c1 * p + c2 * p * p); }

FitResult fit_curve(const std::vector<FitPoint> &points, int d) {
    std::vector<FitPoint> usable;
    std::set<double> distinct;
    for (const auto &pt : points) {
        if (pt.p > 0 && pt.p_L > 0) {
            usable.push_back(pt);
            distinct.insert(pt.p);
        }
    }
    if (usable.size() < 3) {
        throw std::invalid_argument("fit needs at least 3 points with p_L > 0, got " + std::to_string(usable.size()));
    }
    if (distinct.size() < 3) {
        throw std::invalid_argument("fit needs at least 3 distinct p values");
    }
    // columns scaled by the largest p to keep the design well conditioned
    double scale = *distinct.rbegin();
    Eigen::MatrixXd a(usable.size(), 3);
    Eigen::VectorXd y(usable.size());
    for (size_t k = 0; k < usable.size(); k++) {
        double t = usable[k].p / scale;
        a(k, 0) = 1;
        a(k, 1) = t;
        a(k, 2) = t * t;
        y(k) = std::log(usable[k].p_L) - (d / 2.0) * std::log(usable[k].p);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < 3) {
        throw std::invalid_argument("degenerate fit design");
    }
    Eigen::Vector3d c = qr.solve(y);
    FitResult out;
    out.c0 = c(0);
    out.c1 = c(1) / scale;
    out.c2 = c(2) / (scale * scale);
    out.residual_norm = (a * c - y).norm();
    out.d = d;
    out.points_used = static_cast<int>(usable.size());
    if (!std::isfinite(out.c0) || !std::isfinite(out.c1) || !std::isfinite(out.c2)) {
        throw std::runtime_error("fit produced non-finite coefficients");
    }
    return out;
}

const std::vector<ReferenceFit> &reference_fits() {
    static const std::vector<ReferenceFit> fits = {
        {"bb72", "sparse", {12.002, 674.98, -67694, 0, 6, 0}},
        {"bb90", "sparse", {24.397, -290.59, 24215, 0, 10, 0}},
        {"bb108", "sparse", {22.137, 683.86, -72746, 0, 10, 0}},
        {"bb144", "sparse", {28.049, 375.30, -42586, 0, 12, 0}},
        {"bb72", "flat", {11.963, 408.55, -29498, 0, 6, 0}},
        {"bb90", "flat", {24.105, -325.04, 34571, 0, 10, 0}},
        {"bb108", "flat", {21.678, 522.45, -43848, 0, 10, 0}},
        {"bb144", "flat", {27.422, 140.49, 3216.1, 0, 12, 0}},
    };
    return fits;
}

const ReferenceFit &reference_fit(const std::string &code, const std::string &layout) {
    for (const auto &f : reference_fits()) {
        if (f.code == code && f.layout == layout) {
            return f;
        }
    }
    throw std::invalid_argument("no reference fit for " + code + " / " + layout);
}

}  // namespace modqec
