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

#ifndef CEGEN_SIMULATOR_H
#define CEGEN_SIMULATOR_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "cegen/circuit.h"
#include "cegen/state_vector.h"

namespace cegen {

/// Parametric Pauli-channel noise. Defaults are representative magnitudes
/// for current superconducting devices, not a calibration of any machine.
struct NoiseSpec {
    double p1 = 3e-4;         // per one-qubit gate
    double p2 = 8e-3;         // per two- or three-qubit gate
    double p_readout = 1.5e-2;  // per measured bit

    /// Throws ContractViolation unless every probability is in [0, 1].
    void validate() const;

    static NoiseSpec none() { return {0.0, 0.0, 0.0}; }
};

struct MeasurementRecord {
    int shots = 0;
    /// Bitstrings are written with qubit n-1 first and qubit 0 last.
    std::map<std::string, int> counts;

    int count(const std::string& bits) const;
};

/// Runs `circuit` on `state` with the symbols bound to `params`.
///
/// Throws ParameterCountError if params.size() != num_symbolic_params and
/// StructuralError if the register sizes differ.
StateVector apply_circuit(const StateVector& state, const Circuit& circuit, std::span<const double> params = {});

/// One Monte-Carlo trajectory: after each gate, with probability p1 (single
/// qubit) or p2 (multi-qubit), a uniformly random Pauli from {X, Y, Z} hits a
/// uniformly random target of that gate.
StateVector apply_circuit_noisy(const StateVector& state, const Circuit& circuit, std::span<const double> params,
                                const NoiseSpec& noise, uint64_t seed);

/// Draws `shots` computational-basis outcomes; with `noise`, each measured bit
/// flips independently with probability p_readout.
///
/// Throws NumericalStateError for a non-normalized state and
/// ContractViolation for shots < 1.
MeasurementRecord sample_counts(const StateVector& state, int shots, const std::optional<NoiseSpec>& noise,
                                uint64_t seed);

/// Sampled basis indices rather than bitstrings; the hot path behind
/// sample_counts.
std::vector<uint64_t> sample_indices(const StateVector& state, int shots, double p_readout, uint64_t seed);

std::string bitstring(uint64_t index, int num_qubits);

/// <Z_q> of a pure state.
double expectation_z(const StateVector& state, int qubit);

/// In-place gate kernels. `angle` is ignored by fixed gates.
void apply_gate(StateVector& state, GateKind kind, std::span<const int> targets, double angle = 0.0);

enum class Pauli { X, Y, Z };
void apply_pauli(StateVector& state, Pauli pauli, int qubit);

}  // namespace cegen

#endif
