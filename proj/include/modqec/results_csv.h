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

#ifndef MODQEC_RESULTS_CSV_H
#define MODQEC_RESULTS_CSV_H

#include <iosfwd>
#include <string>
#include <vector>

#include "modqec/experiment.h"

namespace modqec {

/// Column order of every results file.
const std::vector<std::string> &results_columns();

std::string results_header();
std::string results_row(const LogicalErrorEstimate &est);
LogicalErrorEstimate parse_results_row(const std::string &line);

/// Appends rows to `path`, writing the header first when the file is new or empty. The
/// whole file is rewritten through a temporary and renamed into place.
void export_results(const std::vector<LogicalErrorEstimate> &estimates, const std::string &path);
std::vector<LogicalErrorEstimate> read_results(const std::string &path);
std::vector<LogicalErrorEstimate> read_results(std::istream &in);

}  // namespace modqec

#endif
