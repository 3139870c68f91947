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

#include "cegen/simulator.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "cegen/error.h"
#include "cegen/rng.h"

namespace cegen {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major

Mat2 gate_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const Complex i{0.0, 1.0};
    switch (kind) {
        case GateKind::RX:
        case GateKind::CRX:
            return {c, -i * s, -i * s, c};
        case GateKind::RY:
            return {c, -s, s, c};
        case GateKind::RZ:
        case GateKind::CRZ:
            return {std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            return {r, r, r, -r};
        }
        case GateKind::X:
        case GateKind::CNOT:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::CSWAP:
            break;
    }
    throw ContractViolation("no 2x2 matrix for CSWAP");
}

// Applies `m` to `target` on every basis pair whose control bits are all set.
void apply_matrix(std::span<Complex> amps, const Mat2& m, int target, uint64_t control_mask) {
    const uint64_t tbit = uint64_t{1} << target;
    const uint64_t dim = amps.size();
    for (uint64_t i = 0; i < dim; ++i) {
        if ((i & tbit) || (i & control_mask) != control_mask) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | tbit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | tbit] = m[2] * a0 + m[3] * a1;
    }
}

void apply_swap(std::span<Complex> amps, int a, int b, uint64_t control_mask) {
    const uint64_t abit = uint64_t{1} << a;
    const uint64_t bbit = uint64_t{1} << b;
    for (uint64_t i = 0; i < amps.size(); ++i) {
        // Visit each (a=1, b=0) entry once and exchange with its (a=0, b=1) partner.
        if ((i & abit) && !(i & bbit) && (i & control_mask) == control_mask) {
            std::swap(amps[i], amps[(i & ~abit) | bbit]);
        }
    }
}

double resolve_angle(const GateOp& op, std::span<const double> params) {
    if (const auto* a = std::get_if<double>(&op.angle)) {
        return *a;
    }
    if (const auto* s = std::get_if<Symbol>(&op.angle)) {
        return params[s->index];
    }
    return 0.0;
}

void check_run(const StateVector& state, const Circuit& circuit, std::span<const double> params) {
    if (static_cast<int>(params.size()) != circuit.num_symbolic_params()) {
        throw ParameterCountError(fmt::format("circuit has {} symbolic parameters, {} values given",
                                              circuit.num_symbolic_params(), params.size()));
    }
    if (state.num_qubits() != circuit.num_qubits()) {
        throw StructuralError(fmt::format("{}-qubit circuit applied to a {}-qubit state", circuit.num_qubits(),
                                          state.num_qubits()));
    }
}

}  // namespace

void NoiseSpec::validate() const {
    for (double p : {p1, p2, p_readout}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ContractViolation(fmt::format("noise probability {} outside [0, 1]", p));
        }
    }
}

int MeasurementRecord::count(const std::string& bits) const {
    auto it = counts.find(bits);
    return it == counts.end() ? 0 : it->second;
}

void apply_gate(StateVector& state, GateKind kind, std::span<const int> targets, double angle) {
    auto amps = state.mutable_amplitudes();
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::H:
        case GateKind::X:
            apply_matrix(amps, gate_matrix(kind, angle), targets[0], 0);
            break;
        case GateKind::CNOT:
        case GateKind::CRX:
        case GateKind::CRZ:
            apply_matrix(amps, gate_matrix(kind, angle), targets[1], uint64_t{1} << targets[0]);
            break;
        case GateKind::CSWAP:
            apply_swap(amps, targets[1], targets[2], uint64_t{1} << targets[0]);
            break;
    }
}

void apply_pauli(StateVector& state, Pauli pauli, int qubit) {
    const Complex i{0.0, 1.0};
    Mat2 m;
    switch (pauli) {
        case Pauli::X: m = {0.0, 1.0, 1.0, 0.0}; break;
        case Pauli::Y: m = {0.0, -i, i, 0.0}; break;
        case Pauli::Z: m = {1.0, 0.0, 0.0, -1.0}; break;
    }
    apply_matrix(state.mutable_amplitudes(), m, qubit, 0);
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit, std::span<const double> params) {
    check_run(state, circuit, params);
    StateVector out = state;
    for (const auto& op : circuit.ops()) {
        apply_gate(out, op.kind, op.targets(), resolve_angle(op, params));
    }
    return out;
}

StateVector apply_circuit_noisy(const StateVector& state, const Circuit& circuit, std::span<const double> params,
                                const NoiseSpec& noise, uint64_t seed) {
    check_run(state, circuit, params);
    noise.validate();
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_pauli(0, 2);
    StateVector out = state;
    for (const auto& op : circuit.ops()) {
        apply_gate(out, op.kind, op.targets(), resolve_angle(op, params));
        const int arity = gate_arity(op.kind);
        const double p = arity == 1 ? noise.p1 : noise.p2;
        if (unit(rng) < p) {
            std::uniform_int_distribution<int> pick_target(0, arity - 1);
            int q = op.targets()[pick_target(rng)];
            apply_pauli(out, static_cast<Pauli>(pick_pauli(rng)), q);
        }
    }
    return out;
}

std::string bitstring(uint64_t index, int num_qubits) {
    std::string bits(num_qubits, '0');
    for (int q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1) {
            bits[num_qubits - 1 - q] = '1';
        }
    }
    return bits;
}

std::vector<uint64_t> sample_indices(const StateVector& state, int shots, double p_readout, uint64_t seed) {
    if (shots < 1) {
        throw ContractViolation(fmt::format("shots must be >= 1, got {}", shots));
    }
    require_normalized(state);
    std::vector<double> cdf(state.dim());
    double acc = 0.0;
    for (size_t i = 0; i < cdf.size(); ++i) {
        acc += std::norm(state[i]);
        cdf[i] = acc;
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<uint64_t> out(shots);
    for (int s = 0; s < shots; ++s) {
        const double u = unit(rng) * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        uint64_t idx = std::min<uint64_t>(it - cdf.begin(), cdf.size() - 1);
        if (p_readout > 0.0) {
            for (int q = 0; q < state.num_qubits(); ++q) {
                if (unit(rng) < p_readout) {
                    idx ^= uint64_t{1} << q;
                }
            }
        }
        out[s] = idx;
    }
    return out;
}

MeasurementRecord sample_counts(const StateVector& state, int shots, const std::optional<NoiseSpec>& noise,
                                uint64_t seed) {
    double p_readout = 0.0;
    if (noise) {
        noise->validate();
        p_readout = noise->p_readout;
    }
    MeasurementRecord rec;
    rec.shots = shots;
    for (uint64_t idx : sample_indices(state, shots, p_readout, seed)) {
        rec.counts[bitstring(idx, state.num_qubits())] += 1;
    }
    return rec;
}

double expectation_z(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw StructuralError(fmt::format("qubit {} out of range", qubit));
    }
    double e = 0.0;
    for (size_t i = 0; i < state.dim(); ++i) {
        const double p = std::norm(state[i]);
        e += ((i >> qubit) & 1) ? -p : p;
    }
    return e;
}

}  // namespace cegen
