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

#include "modqec/program_io.h"

#include "gtest/gtest.h"
#include "modqec/catalog.h"
#include "modqec/cyclic_layout.h"
#include "modqec/layouts.h"

using namespace modqec;

TEST(ProgramIo, round_trips_every_layout) {
    BBCode code = find_code("bb72");
    for (Layout layout : {Layout::cyclic, Layout::sparse, Layout::flat, Layout::interleaved_gates,
                          Layout::concurrent_rounds}) {
        MachineProgram p = syndrome_rounds(code, layout, 2);
        std::string text = program_to_string(p);
        MachineProgram back = program_from_string(text);
        EXPECT_EQ(back, p) << layout_name(layout);
        EXPECT_EQ(program_to_string(back), text);
    }
    MachineProgram chain = serialize_chain_sequential(syndrome_rounds(code, Layout::sparse, 1));
    EXPECT_EQ(program_from_string(program_to_string(chain)), chain);
}

TEST(ProgramIo, round_trips_cyclic_gadget) {
    std::vector<PauliOperator> ps{PauliOperator::from_string("XYZ"), PauliOperator::from_string("ZZI")};
    MachineProgram p = cyclic_layout(ps, 2, 3).program;
    EXPECT_EQ(program_from_string(program_to_string(p)), p);
}

TEST(ProgramIo, malformed_input_reports_line) {
    const std::string good = program_to_string(syndrome_rounds(find_code("bb72"), Layout::sparse, 1));
    EXPECT_THROW(program_from_string("NOT_A_PROGRAM\n"), ProgramError);
    std::string bad = good;
    bad.replace(bad.find("END_LAYER"), 9, "BOGUS 1 2");
    try {
        program_from_string(bad);
        FAIL();
    } catch (const ProgramError &e) {
        EXPECT_NE(std::string(e.what()).find("line"), std::string::npos) << e.what();
    }
    EXPECT_THROW(program_from_string(good.substr(0, good.rfind("END_LAYER"))), ProgramError);
    EXPECT_THROW(program_from_string(""), ProgramError);
}
