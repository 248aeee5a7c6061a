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

#include "modqec/circuit.h"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace modqec {

namespace {

struct GateInfo {
    CircuitGate gate;
    const char *name;
};

constexpr GateInfo kGates[] = {
    {CircuitGate::R, "R"},
    {CircuitGate::RX, "RX"},
    {CircuitGate::H, "H"},
    {CircuitGate::CX, "CX"},
    {CircuitGate::CY, "CY"},
    {CircuitGate::CZ, "CZ"},
    {CircuitGate::M, "M"},
    {CircuitGate::MX, "MX"},
    {CircuitGate::MR, "MR"},
    {CircuitGate::MRX, "MRX"},
    {CircuitGate::X_ERROR, "X_ERROR"},
    {CircuitGate::Z_ERROR, "Z_ERROR"},
    {CircuitGate::DEPOLARIZE1, "DEPOLARIZE1"},
    {CircuitGate::DEPOLARIZE2, "DEPOLARIZE2"},
    {CircuitGate::TICK, "TICK"},
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string circuit_gate_name(CircuitGate g) {
    for (const auto &info : kGates) {
        if (info.gate == g) {
            return info.name;
        }
    }
    return "?";
}

bool is_measurement(CircuitGate g) {
    return g == CircuitGate::M || g == CircuitGate::MX || g == CircuitGate::MR || g == CircuitGate::MRX;
}

bool is_noise(CircuitGate g) {
    return g == CircuitGate::X_ERROR || g == CircuitGate::Z_ERROR || g == CircuitGate::DEPOLARIZE1 ||
           g == CircuitGate::DEPOLARIZE2;
}

bool is_two_qubit(CircuitGate g) {
    return g == CircuitGate::CX || g == CircuitGate::CY || g == CircuitGate::CZ || g == CircuitGate::DEPOLARIZE2;
}

int NoisyCircuit::append(CircuitGate gate, const std::vector<int> &targets, double arg) {
    if (gate != CircuitGate::TICK && targets.empty()) {
        return -1;
    }
    if (is_noise(gate) && arg <= 0) {
        return -1;
    }
    if (arg < 0 || arg > 1) {
        throw std::invalid_argument("probability out of range: " + format_double(arg));
    }
    if (is_two_qubit(gate) && targets.size() % 2) {
        throw std::invalid_argument(circuit_gate_name(gate) + " needs target pairs");
    }
    for (int q : targets) {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("circuit target " + std::to_string(q) + " out of range");
        }
    }
    ops_.push_back(CircuitOp{gate, arg, targets});
    if (is_measurement(gate)) {
        int first = num_measurements_;
        num_measurements_ += static_cast<int>(targets.size());
        return first;
    }
    return -1;
}

void NoisyCircuit::add_detector(std::vector<int> measurements) {
    for (int m : measurements) {
        if (m < 0 || m >= num_measurements_) {
            throw std::out_of_range("detector references missing measurement " + std::to_string(m));
        }
    }
    detectors_.push_back(std::move(measurements));
}

void NoisyCircuit::add_observable(std::vector<int> measurements) {
    for (int m : measurements) {
        if (m < 0 || m >= num_measurements_) {
            throw std::out_of_range("observable references missing measurement " + std::to_string(m));
        }
    }
    observables_.push_back(std::move(measurements));
}

size_t NoisyCircuit::count_noise_channels() const {
    size_t n = 0;
    for (const auto &op : ops_) {
        if (is_noise(op.gate)) {
            n += op.gate == CircuitGate::DEPOLARIZE2 ? op.targets.size() / 2 : op.targets.size();
        } else if (is_measurement(op.gate) && op.arg > 0) {
            n += op.targets.size();
        }
    }
    return n;
}

size_t NoisyCircuit::count_gate(CircuitGate g) const {
    size_t n = 0;
    for (const auto &op : ops_) {
        if (op.gate == g) {
            n++;
        }
    }
    return n;
}

NoisyCircuit NoisyCircuit::without_noise() const {
    NoisyCircuit out = *this;
    out.ops_.clear();
    for (auto op : ops_) {
        if (is_noise(op.gate)) {
            continue;
        }
        if (is_measurement(op.gate)) {
            op.arg = 0;
        }
        out.ops_.push_back(std::move(op));
    }
    return out;
}

void write_circuit(std::ostream &out, const NoisyCircuit &circuit) {
    out << "QUBITS " << circuit.num_qubits() << "\n";
    for (const auto &op : circuit.ops()) {
        out << circuit_gate_name(op.gate);
        if (is_noise(op.gate) || (is_measurement(op.gate) && op.arg > 0)) {
            out << '(' << format_double(op.arg) << ')';
        }
        for (int q : op.targets) {
            out << ' ' << q;
        }
        out << "\n";
    }
    int total = circuit.num_measurements();
    for (const auto &d : circuit.detectors()) {
        out << "DETECTOR";
        for (int m : d) {
            out << " rec[" << (m - total) << ']';
        }
        out << "\n";
    }
    for (size_t k = 0; k < circuit.observables().size(); k++) {
        out << "OBSERVABLE_INCLUDE(" << k << ')';
        for (int m : circuit.observables()[k]) {
            out << " rec[" << (m - total) << ']';
        }
        out << "\n";
    }
}

std::string circuit_to_string(const NoisyCircuit &circuit) {
    std::stringstream ss;
    write_circuit(ss, circuit);
    return ss.str();
}

NoisyCircuit read_circuit(std::istream &in) {
    std::string line;
    size_t line_no = 0;
    NoisyCircuit circuit;
    bool have_qubits = false;
    std::vector<std::vector<int>> pending_obs;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_no++;
        std::stringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') {
            continue;
        }
        if (head == "QUBITS") {
            int n = -1;
            if (!(ss >> n) || n < 0) {
                fail("bad QUBITS line");
            }
            circuit = NoisyCircuit(n);
            have_qubits = true;
            continue;
        }
        if (!have_qubits) {
            fail("QUBITS must come first");
        }
        std::string name = head;
        double arg = 0;
        std::string arg_text;
        auto paren = head.find('(');
        if (paren != std::string::npos) {
            if (head.back() != ')') {
                fail("unterminated argument in '" + head + "'");
            }
            name = head.substr(0, paren);
            arg_text = head.substr(paren + 1, head.size() - paren - 2);
            try {
                arg = std::stod(arg_text);
            } catch (const std::logic_error &) {
                fail("bad argument '" + arg_text + "'");
            }
        }
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) {
            toks.push_back(t);
        }
        if (name == "DETECTOR" || name == "OBSERVABLE_INCLUDE") {
            std::vector<int> refs;
            for (const auto &tok : toks) {
                if (tok.rfind("rec[", 0) != 0 || tok.back() != ']') {
                    fail("bad record reference '" + tok + "'");
                }
                int rel = std::stoi(tok.substr(4, tok.size() - 5));
                if (rel >= 0) {
                    fail("record references must be negative");
                }
                refs.push_back(circuit.num_measurements() + rel);
            }
            if (name == "DETECTOR") {
                circuit.add_detector(refs);
            } else {
                size_t k = static_cast<size_t>(arg);
                if (pending_obs.size() <= k) {
                    pending_obs.resize(k + 1);
                }
                pending_obs[k].insert(pending_obs[k].end(), refs.begin(), refs.end());
            }
            continue;
        }
        CircuitGate gate = CircuitGate::TICK;
        bool found = false;
        for (const auto &info : kGates) {
            if (name == info.name) {
                gate = info.gate;
                found = true;
            }
        }
        if (!found) {
            fail("unknown operation '" + name + "'");
        }
        std::vector<int> targets;
        for (const auto &tok : toks) {
            try {
                targets.push_back(std::stoi(tok));
            } catch (const std::logic_error &) {
                fail("bad target '" + tok + "'");
            }
        }
        circuit.append(gate, targets, arg);
    }
    for (auto &obs : pending_obs) {
        circuit.add_observable(obs);
    }
    return circuit;
}

NoisyCircuit circuit_from_string(const std::string &text) {
    std::stringstream ss(text);
    return read_circuit(ss);
}

}  // namespace modqec
