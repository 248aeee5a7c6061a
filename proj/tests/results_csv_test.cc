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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace modqec;

static LogicalErrorEstimate example() {
    LogicalErrorEstimate e;
    e.code = "bb72";
    e.layout = "sparse";
    e.basis = "Z";
    e.p = 2e-3;
    e.tau_s = 30;
    e.tau_m = 30;
    e.T = 6;
    e.shots = 20000;
    e.failures = 431;
    e.p_fail_total = 431.0 / 20000;
    e.p_L_round = 0.0036;
    e.ci_low = 0.0033;
    e.ci_high = 0.0040;
    e.seed = 1;
    e.decoder = "bposd-ms0.8-it100-osd0";
    e.timestamp = "2026-01-02T03:04:05Z";
    return e;
}

static std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(ResultsCsv, exact_header) {
    EXPECT_EQ(results_header(),
              "code,layout,basis,p,tau_s,tau_m,T,shots,failures,p_fail_total,p_L_round,ci_low,ci_high,seed,decoder,"
              "timestamp");
}

TEST(ResultsCsv, row_round_trip) {
    LogicalErrorEstimate e = example();
    std::string row = results_row(e);
    EXPECT_EQ(row, "bb72,sparse,Z,0.002,30,30,6,20000,431,0.02155,0.0036,0.0033,0.004,1,bposd-ms0.8-it100-osd0,"
                   "2026-01-02T03:04:05Z");
    LogicalErrorEstimate back = parse_results_row(row);
    EXPECT_EQ(results_row(back), row);
    EXPECT_EQ(back.failures, 431u);
    EXPECT_THROW(parse_results_row("a,b,c"), std::invalid_argument);
    EXPECT_THROW(parse_results_row("bb72,sparse,Z,x,30,30,6,1,0,0,0,0,0,1,d,t"), std::invalid_argument);
    e.code = "a,b";
    EXPECT_THROW(results_row(e), std::invalid_argument);
}

TEST(ResultsCsv, export_appends) {
    auto path = (std::filesystem::temp_directory_path() / "modqec_results_test.csv").string();
    std::filesystem::remove(path);
    export_results({}, path);
    EXPECT_EQ(slurp(path), results_header() + "\n");
    export_results({example()}, path);
    LogicalErrorEstimate second = example();
    second.p = 5e-3;
    export_results({second}, path);
    auto rows = read_results(path);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_DOUBLE_EQ(rows[1].p, 5e-3);
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove(path);
    EXPECT_THROW(read_results(path), std::runtime_error);
    std::stringstream bad("code,layout\n");
    EXPECT_THROW(read_results(bad), std::invalid_argument);
}
