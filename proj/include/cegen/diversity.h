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

#ifndef CEGEN_DIVERSITY_H
#define CEGEN_DIVERSITY_H

#include <cstdint>
#include <span>
#include <vector>

#include "cegen/circuit.h"
#include "cegen/state_vector.h"

namespace cegen {

/// SWAP-test ancilla-zero probability 1/2 (1 + |<a|b>|^2).
///
/// shots == 0 returns the exact value; shots > 0 samples the ancilla of the
/// explicit (2n+1)-qubit circuit from swap_test_circuit().
double swap_test(const StateVector& a, const StateVector& b, int shots, uint64_t seed);

/// Register layout of the explicit SWAP-test circuit: copy a on qubits
/// [0, n), copy b on [n, 2n), ancilla on qubit 2n.
struct SwapTestCircuit {
    StateVector input;  // |a> (x) |b> (x) |0>
    Circuit circuit;    // H(anc), CSWAP(anc, i, n+i) for each i, H(anc)
    int ancilla;
};

SwapTestCircuit swap_test_circuit(const StateVector& a, const StateVector& b);

/// P(ancilla = 0) of the explicit circuit, computed from the final statevector.
double swap_circuit_p0(const StateVector& a, const StateVector& b);

struct SwapBin {
    double low = 0.0;
    double high = 0.0;
    double mean_p0 = 0.0;  // 0 when pair_count == 0
    int pair_count = 0;
};

struct SwapReport {
    std::vector<SwapBin> bins;
    double threshold = 0.95;
    double overall_mean_p0 = 0.0;  // pair-weighted over all bins
    int total_pairs = 0;
    bool collapsed = false;
};

inline constexpr double kDefaultCollapseThreshold = 0.95;
inline constexpr int kDefaultPairsPerBin = 50;

/// Groups states by CE bin and SWAP-tests up to `pairs_per_bin` disjoint
/// random pairs inside each bin.
///
/// Pairs are drawn up front from `seed` (shuffle, then consecutive pairing),
/// so the report does not depend on evaluation order. Values outside the
/// edges are folded into the boundary bins. Throws ContractViolation unless
/// states.size() == ce_values.size() >= 2.
SwapReport diversity_scan(std::span<const StateVector> states, std::span<const double> ce_values,
                          std::span<const double> bin_edges, int pairs_per_bin, int shots, uint64_t seed,
                          double threshold = kDefaultCollapseThreshold);

/// weight * max(0, overall_mean_p0 - threshold). Throws ContractViolation
/// for a negative weight.
double diversity_penalty(const SwapReport& report, double weight);

}  // namespace cegen

#endif
