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

#include "modqec/results_csv.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace modqec {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

const std::vector<std::string> &results_columns() {
    static const std::vector<std::string> cols = {
        "code",  "layout",      "basis",     "p",      "tau_s",   "tau_m", "T",       "shots",
        "failures", "p_fail_total", "p_L_round", "ci_low", "ci_high", "seed",  "decoder", "timestamp",
    };
    return cols;
}

std::string results_header() {
    std::string out;
    for (const auto &c : results_columns()) {
        out += (out.empty() ? "" : ",") + c;
    }
    return out;
}

std::string results_row(const LogicalErrorEstimate &e) {
    for (const auto *s : {&e.code, &e.layout, &e.basis, &e.decoder, &e.timestamp}) {
        if (s->find(',') != std::string::npos || s->find('\n') != std::string::npos) {
            throw std::invalid_argument("results field contains a separator: " + *s);
        }
    }
    std::stringstream ss;
    ss << e.code << ',' << e.layout << ',' << e.basis << ',' << fmt(e.p) << ',' << e.tau_s << ',' << e.tau_m << ','
       << e.T << ',' << e.shots << ',' << e.failures << ',' << fmt(e.p_fail_total) << ',' << fmt(e.p_L_round) << ','
       << fmt(e.ci_low) << ',' << fmt(e.ci_high) << ',' << e.seed << ',' << e.decoder << ',' << e.timestamp;
    return ss.str();
}

LogicalErrorEstimate parse_results_row(const std::string &line) {
    auto f = split(line);
    if (f.size() != results_columns().size()) {
        throw std::invalid_argument("results row has " + std::to_string(f.size()) + " fields, expected " +
                                    std::to_string(results_columns().size()));
    }
    LogicalErrorEstimate e;
    try {
        e.code = f[0];
        e.layout = f[1];
        e.basis = f[2];
        e.p = std::stod(f[3]);
        e.tau_s = std::stoi(f[4]);
        e.tau_m = std::stoi(f[5]);
        e.T = std::stoi(f[6]);
        e.shots = std::stoull(f[7]);
        e.failures = std::stoull(f[8]);
        e.p_fail_total = std::stod(f[9]);
        e.p_L_round = std::stod(f[10]);
        e.ci_low = std::stod(f[11]);
        e.ci_high = std::stod(f[12]);
        e.seed = std::stoull(f[13]);
        e.decoder = f[14];
        e.timestamp = f[15];
    } catch (const std::logic_error &) {
        throw std::invalid_argument("malformed results row: " + line);
    }
    return e;
}

void export_results(const std::vector<LogicalErrorEstimate> &estimates, const std::string &path) {
    std::string existing;
    {
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            existing = ss.str();
        }
    }
    if (existing.empty()) {
        existing = results_header() + "\n";
    } else if (existing.back() != '\n') {
        existing += "\n";
    }
    for (const auto &e : estimates) {
        existing += results_row(e) + "\n";
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp);
        }
        out << existing;
        if (!out.flush()) {
            throw std::runtime_error("failed writing " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw std::runtime_error("cannot replace " + path + ": " + ec.message());
    }
}

std::vector<LogicalErrorEstimate> read_results(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("results file is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != results_header()) {
        throw std::invalid_argument("unexpected results header: " + line);
    }
    std::vector<LogicalErrorEstimate> out;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        out.push_back(parse_results_row(line));
    }
    return out;
}

std::vector<LogicalErrorEstimate> read_results(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_results(in);
}

}  // namespace modqec
