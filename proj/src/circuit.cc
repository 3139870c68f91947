// Copyright 2026 The cegen Authors
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

#include "cegen/circuit.h"

#include <algorithm>

#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CRX: return "CRX";
        case GateKind::CRZ: return "CRZ";
        case GateKind::CSWAP: return "CSWAP";
    }
    return "?";
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CRX:
        case GateKind::CRZ:
            return 2;
        case GateKind::CSWAP:
            return 3;
        default:
            return 1;
    }
}

bool gate_is_parameterized(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::CRX:
        case GateKind::CRZ:
            return true;
        default:
            return false;
    }
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw StructuralError(fmt::format("circuit needs at least one qubit, got {}", num_qubits));
    }
}

Circuit& Circuit::append(const GateOp& op) {
    const int arity = gate_arity(op.kind);
    for (int k = 0; k < 3; ++k) {
        int q = op.qubits[k];
        if (k < arity) {
            if (q < 0 || q >= num_qubits_) {
                throw StructuralError(
                    fmt::format("{} target {} out of range for {} qubits", gate_name(op.kind), q, num_qubits_));
            }
            for (int j = 0; j < k; ++j) {
                if (op.qubits[j] == q) {
                    throw StructuralError(fmt::format("{} repeats qubit {}", gate_name(op.kind), q));
                }
            }
        } else if (q != -1) {
            throw StructuralError(fmt::format("{} takes {} target(s)", gate_name(op.kind), arity));
        }
    }
    const bool has_angle = !std::holds_alternative<std::monostate>(op.angle);
    if (has_angle != gate_is_parameterized(op.kind)) {
        throw StructuralError(fmt::format("{} {} an angle", gate_name(op.kind),
                                          has_angle ? "does not take" : "requires"));
    }
    if (const auto* s = std::get_if<Symbol>(&op.angle)) {
        if (s->index < 0 || s->index >= num_symbolic_params_) {
            throw StructuralError(fmt::format("symbol {} not reserved (circuit has {})", s->index, num_symbolic_params_));
        }
    }
    ops_.push_back(op);
    return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) {
        throw StructuralError(fmt::format("cannot extend a {}-qubit circuit with a {}-qubit one", num_qubits_,
                                          other.num_qubits_));
    }
    const int shift = num_symbolic_params_;
    num_symbolic_params_ += other.num_symbolic_params_;
    for (GateOp op : other.ops_) {
        if (auto* s = std::get_if<Symbol>(&op.angle)) {
            s->index += shift;
        }
        append(op);
    }
    return *this;
}

Circuit bind(const Circuit& circuit, std::span<const double> params) {
    if (static_cast<int>(params.size()) != circuit.num_symbolic_params()) {
        throw ParameterCountError(fmt::format("circuit has {} symbolic parameters, {} values given",
                                              circuit.num_symbolic_params(), params.size()));
    }
    Circuit out(circuit.num_qubits());
    for (GateOp op : circuit.ops()) {
        if (const auto* s = std::get_if<Symbol>(&op.angle)) {
            op.angle = params[s->index];
        }
        out.append(op);
    }
    return out;
}

Circuit inverse(const Circuit& circuit) {
    if (circuit.num_symbolic_params() != 0) {
        throw ContractViolation("inverse() needs a bound circuit; call bind() first");
    }
    Circuit out(circuit.num_qubits());
    const auto& ops = circuit.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        GateOp op = *it;
        if (auto* a = std::get_if<double>(&op.angle)) {
            *a = -*a;
        }
        out.append(op);
    }
    return out;
}

DepthReport circuit_depth_report(const Circuit& circuit) {
    DepthReport report;
    std::vector<int> frontier(circuit.num_qubits(), 0);
    for (const auto& op : circuit.ops()) {
        int layer = 0;
        for (int q : op.targets()) {
            layer = std::max(layer, frontier[q]);
        }
        ++layer;
        for (int q : op.targets()) {
            frontier[q] = layer;
        }
        report.depth = std::max(report.depth, layer);
        report.gate_counts[op.kind] += 1;
        if (gate_arity(op.kind) > 1) {
            report.multi_qubit_gates += 1;
        }
    }
    return report;
}

}  // namespace cegen
