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

#ifndef CEGEN_CIRCUIT_H
#define CEGEN_CIRCUIT_H

#include <array>
#include <map>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace cegen {

enum class GateKind { RX, RY, RZ, H, X, CNOT, CRX, CRZ, CSWAP };

std::string_view gate_name(GateKind kind);

/// Number of qubits the gate acts on.
int gate_arity(GateKind kind);

/// True for the rotation gates that carry an angle.
bool gate_is_parameterized(GateKind kind);

/// Index into the parameter vector passed at execution time.
struct Symbol {
    int index;
    bool operator==(const Symbol&) const = default;
};

/// Gate angle: absent, a literal value in radians, or a symbolic parameter.
using Angle = std::variant<std::monostate, double, Symbol>;

/// One gate application. Controlled gates list the control first; CSWAP is
/// (control, a, b).
struct GateOp {
    GateKind kind;
    std::array<int, 3> qubits{-1, -1, -1};
    Angle angle;

    std::span<const int> targets() const { return {qubits.data(), static_cast<size_t>(gate_arity(kind))}; }
    bool operator==(const GateOp&) const = default;
};

/// Ordered gate list over a fixed register.
///
/// Every op is validated on insertion, so a constructed Circuit always
/// satisfies: distinct in-range targets, correct arity, angles present
/// exactly on rotation gates, symbols in [0, num_symbolic_params).
class Circuit {
   public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    int num_symbolic_params() const { return num_symbolic_params_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    bool empty() const { return ops_.empty(); }

    /// Reserves a fresh symbolic parameter.
    Symbol new_symbol() { return Symbol{num_symbolic_params_++}; }

    /// Appends after validation; throws StructuralError on a malformed op.
    Circuit& append(const GateOp& op);

    Circuit& rx(int q, Angle a) { return append({GateKind::RX, {q, -1, -1}, a}); }
    Circuit& ry(int q, Angle a) { return append({GateKind::RY, {q, -1, -1}, a}); }
    Circuit& rz(int q, Angle a) { return append({GateKind::RZ, {q, -1, -1}, a}); }
    Circuit& h(int q) { return append({GateKind::H, {q, -1, -1}, {}}); }
    Circuit& x(int q) { return append({GateKind::X, {q, -1, -1}, {}}); }
    Circuit& cnot(int c, int t) { return append({GateKind::CNOT, {c, t, -1}, {}}); }
    Circuit& crx(int c, int t, Angle a) { return append({GateKind::CRX, {c, t, -1}, a}); }
    Circuit& crz(int c, int t, Angle a) { return append({GateKind::CRZ, {c, t, -1}, a}); }
    Circuit& cswap(int c, int a, int b) { return append({GateKind::CSWAP, {c, a, b}, {}}); }

    /// Appends all ops of `other` (same register). Symbols of `other` are
    /// shifted past this circuit's symbols.
    Circuit& extend(const Circuit& other);

    bool operator==(const Circuit&) const = default;

   private:
    int num_qubits_;
    int num_symbolic_params_ = 0;
    std::vector<GateOp> ops_;
};

/// Replaces every symbol by its value. Throws ParameterCountError if
/// params.size() != num_symbolic_params.
Circuit bind(const Circuit& circuit, std::span<const double> params);

/// Exact inverse of a circuit without symbols: reversed order, negated
/// angles, self-inverse gates unchanged. Throws ContractViolation if the
/// circuit still carries symbols.
Circuit inverse(const Circuit& circuit);

struct DepthReport {
    int depth = 0;
    std::map<GateKind, int> gate_counts;
    int multi_qubit_gates = 0;
};

/// Depth of the greedy as-soon-as-possible layering and per-kind counts.
DepthReport circuit_depth_report(const Circuit& circuit);

}  // namespace cegen

#endif
