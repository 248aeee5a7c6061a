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

#ifndef MODQEC_PROGRAM_IO_H
#define MODQEC_PROGRAM_IO_H

#include <iosfwd>
#include <string>

#include "modqec/machine.h"

namespace modqec {

void write_program(std::ostream &out, const MachineProgram &program);
std::string program_to_string(const MachineProgram &program);
/// Throws ProgramError with a line number on malformed input.
MachineProgram read_program(std::istream &in);
MachineProgram program_from_string(const std::string &text);

}  // namespace modqec

#endif
