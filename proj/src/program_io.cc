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

#include <istream>
#include <ostream>
#include <sstream>

namespace modqec {

static void write_ref(std::ostream &out, const QubitRef &q) { out << q.row << ':' << q.module << ':' << q.slot; }

void write_program(std::ostream &out, const MachineProgram &program) {
    const auto &cfg = program.config;
    out << "MODQEC_PROGRAM 1\n";
    out << "CONFIG moving_rows=" << cfg.num_moving_rows << " L=" << cfg.L << " module_size=" << cfg.module_size
        << " flat=" << (cfg.flat ? 1 : 0) << " parallelism=" << (cfg.parallelism == Parallelism::chain ? "chain" : "full")
        << "\n";
    out << "QUBITS " << program.num_qubits << "\n";
    for (size_t r = 0; r < program.qubit_map.size(); r++) {
        for (size_t m = 0; m < program.qubit_map[r].size(); m++) {
            const auto &slots = program.qubit_map[r][m];
            bool any = false;
            for (int q : slots) {
                any |= q >= 0;
            }
            if (!any) {
                continue;
            }
            out << "MODULE " << r << ' ' << m;
            for (int q : slots) {
                if (q < 0) {
                    out << " -";
                } else {
                    out << ' ' << q;
                }
            }
            out << "\n";
        }
    }
    for (const auto &layer : program.layers) {
        for (const auto &ins : layer) {
            switch (ins.op) {
                case OpKind::prep_plus:
                    out << "PREP_PLUS";
                    break;
                case OpKind::measure_x:
                    out << (ins.reset ? "MEASURE_RESET_X" : "MEASURE_X");
                    break;
                case OpKind::gate1:
                case OpKind::gate2:
                    out << gate_name(ins.gate);
                    break;
                case OpKind::shift:
                    out << "SHIFT " << ins.row << ' ' << ins.amount << "\n";
                    continue;
                case OpKind::intra_shift:
                    out << "INTRA_SHIFT " << ins.row << ' ' << ins.module << ' ' << ins.amount << "\n";
                    continue;
            }
            for (size_t k = 0; k < ins.targets.size(); k++) {
                out << ' ';
                write_ref(out, ins.targets[k]);
                if (ins.op == OpKind::measure_x && ins.keys[k] >= 0) {
                    out << '@' << ins.keys[k];
                }
            }
            out << "\n";
        }
        out << "END_LAYER\n";
    }
}

std::string program_to_string(const MachineProgram &program) {
    std::stringstream ss;
    write_program(ss, program);
    return ss.str();
}

namespace {

struct Parser {
    size_t line_no = 0;

    [[noreturn]] void fail(const std::string &msg) const {
        throw ProgramError("line " + std::to_string(line_no) + ": " + msg);
    }

    int to_int(const std::string &s) const {
        try {
            size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) {
                fail("bad integer '" + s + "'");
            }
            return v;
        } catch (const std::logic_error &) {
            fail("bad integer '" + s + "'");
        }
    }

    QubitRef parse_ref(const std::string &tok, int *key) const {
        std::string body = tok;
        if (key != nullptr) {
            *key = -1;
            auto at = tok.find('@');
            if (at != std::string::npos) {
                *key = to_int(tok.substr(at + 1));
                body = tok.substr(0, at);
            }
        }
        auto c1 = body.find(':');
        auto c2 = body.find(':', c1 == std::string::npos ? 0 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            fail("bad qubit reference '" + tok + "'");
        }
        return QubitRef{to_int(body.substr(0, c1)), to_int(body.substr(c1 + 1, c2 - c1 - 1)),
                        to_int(body.substr(c2 + 1))};
    }
};

}  // namespace

MachineProgram read_program(std::istream &in) {
    Parser p;
    std::string line;
    MachineProgram program;
    bool have_header = false;
    bool have_config = false;
    bool have_qubits = false;
    Layer current;
    auto need_shape = [&]() {
        if (!have_config || !have_qubits) {
            p.fail("CONFIG and QUBITS must precede modules and instructions");
        }
        if (program.qubit_map.empty()) {
            program = MachineProgram::empty(program.config, program.num_qubits);
        }
    };
    while (std::getline(in, line)) {
        p.line_no++;
        std::stringstream ss(line);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) {
            tok.push_back(t);
        }
        if (tok.empty() || tok[0][0] == '#') {
            continue;
        }
        const std::string &op = tok[0];
        if (!have_header) {
            if (op != "MODQEC_PROGRAM" || tok.size() != 2 || tok[1] != "1") {
                p.fail("expected 'MODQEC_PROGRAM 1' header");
            }
            have_header = true;
            continue;
        }
        if (op == "CONFIG") {
            for (size_t k = 1; k < tok.size(); k++) {
                auto eq = tok[k].find('=');
                if (eq == std::string::npos) {
                    p.fail("bad CONFIG field '" + tok[k] + "'");
                }
                std::string key = tok[k].substr(0, eq);
                std::string val = tok[k].substr(eq + 1);
                if (key == "moving_rows") {
                    program.config.num_moving_rows = p.to_int(val);
                } else if (key == "L") {
                    program.config.L = p.to_int(val);
                } else if (key == "module_size") {
                    program.config.module_size = p.to_int(val);
                } else if (key == "flat") {
                    program.config.flat = p.to_int(val) != 0;
                } else if (key == "parallelism") {
                    if (val != "full" && val != "chain") {
                        p.fail("parallelism must be full or chain");
                    }
                    program.config.parallelism = val == "chain" ? Parallelism::chain : Parallelism::full;
                } else {
                    p.fail("unknown CONFIG field '" + key + "'");
                }
            }
            if (program.config.num_moving_rows < 1 || program.config.num_moving_rows > 2 || program.config.L < 1 ||
                program.config.module_size < 1) {
                p.fail("invalid array configuration");
            }
            have_config = true;
        } else if (op == "QUBITS") {
            if (tok.size() != 2) {
                p.fail("QUBITS takes one count");
            }
            program.num_qubits = p.to_int(tok[1]);
            have_qubits = true;
        } else if (op == "MODULE") {
            need_shape();
            if (tok.size() < 3) {
                p.fail("MODULE needs row and module");
            }
            int r = p.to_int(tok[1]);
            int m = p.to_int(tok[2]);
            if (r < 0 || r >= program.config.num_rows() || m < 0 || m >= program.config.L ||
                tok.size() - 3 != static_cast<size_t>(program.config.module_size)) {
                p.fail("MODULE line does not match the array shape");
            }
            for (int s = 0; s < program.config.module_size; s++) {
                const auto &v = tok[3 + s];
                program.qubit_map[r][m][s] = v == "-" ? -1 : p.to_int(v);
            }
        } else if (op == "END_LAYER") {
            need_shape();
            program.layers.push_back(std::move(current));
            current.clear();
        } else if (op == "SHIFT") {
            need_shape();
            if (tok.size() != 3) {
                p.fail("SHIFT takes row and amount");
            }
            current.push_back(Instruction::shift(p.to_int(tok[1]), p.to_int(tok[2])));
        } else if (op == "INTRA_SHIFT") {
            need_shape();
            if (tok.size() != 4) {
                p.fail("INTRA_SHIFT takes row, module and amount");
            }
            current.push_back(Instruction::intra_shift(p.to_int(tok[1]), p.to_int(tok[2]), p.to_int(tok[3])));
        } else {
            need_shape();
            Instruction ins;
            bool keyed = false;
            if (op == "PREP_PLUS") {
                ins.op = OpKind::prep_plus;
            } else if (op == "MEASURE_X" || op == "MEASURE_RESET_X") {
                ins.op = OpKind::measure_x;
                ins.reset = op == "MEASURE_RESET_X";
                keyed = true;
            } else if (op == "H") {
                ins.op = OpKind::gate1;
                ins.gate = GateKind::H;
            } else if (op == "CX" || op == "CY" || op == "CZ") {
                ins.op = OpKind::gate2;
                ins.gate = op == "CX" ? GateKind::CX : op == "CY" ? GateKind::CY : GateKind::CZ;
            } else {
                p.fail("unknown instruction '" + op + "'");
            }
            for (size_t k = 1; k < tok.size(); k++) {
                int key = -1;
                ins.targets.push_back(p.parse_ref(tok[k], keyed ? &key : nullptr));
                if (keyed) {
                    ins.keys.push_back(key);
                }
            }
            current.push_back(std::move(ins));
        }
    }
    if (!have_header) {
        throw ProgramError("missing program header");
    }
    if (!current.empty()) {
        throw ProgramError("instructions after the last END_LAYER");
    }
    if (program.qubit_map.empty() && have_config) {
        program = MachineProgram::empty(program.config, program.num_qubits);
    }
    return program;
}

MachineProgram program_from_string(const std::string &text) {
    std::stringstream ss(text);
    return read_program(ss);
}

}  // namespace modqec
