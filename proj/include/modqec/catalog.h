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

#ifndef MODQEC_CATALOG_H
#define MODQEC_CATALOG_H

#include <string>
#include <vector>

#include "modqec/codes.h"

namespace modqec {

std::string default_catalog_path();

/// Loads and validates every record: recomputed n, k and weight must agree with the file.
std::vector<BBCode> load_catalog(const std::string &path = default_catalog_path());
BBCode find_code(const std::string &name, const std::string &path = default_catalog_path());

}  // namespace modqec

#endif
