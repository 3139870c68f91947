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

#include "cegen/diversity.h"

#include <algorithm>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "cegen/error.h"
#include "cegen/rng.h"
#include "cegen/simulator.h"

namespace cegen {

SwapTestCircuit swap_test_circuit(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw StructuralError(fmt::format("swap test of {}- and {}-qubit states", a.num_qubits(), b.num_qubits()));
    }
    const int n = a.num_qubits();
    const int ancilla = 2 * n;
    Circuit c(2 * n + 1);
    c.h(ancilla);
    for (int i = 0; i < n; ++i) {
        c.cswap(ancilla, i, n + i);
    }
    c.h(ancilla);
    return SwapTestCircuit{tensor(tensor(a, b), StateVector(1)), std::move(c), ancilla};
}

double swap_circuit_p0(const StateVector& a, const StateVector& b) {
    auto stc = swap_test_circuit(a, b);
    StateVector out = apply_circuit(stc.input, stc.circuit);
    const uint64_t abit = uint64_t{1} << stc.ancilla;
    double p0 = 0.0;
    for (uint64_t i = 0; i < out.dim(); ++i) {
        if (!(i & abit)) {
            p0 += std::norm(out[i]);
        }
    }
    return p0;
}

double swap_test(const StateVector& a, const StateVector& b, int shots, uint64_t seed) {
    if (shots < 0) {
        throw ContractViolation(fmt::format("shots must be >= 0, got {}", shots));
    }
    if (shots == 0) {
        return 0.5 * (1.0 + std::norm(inner_product(a, b)));
    }
    require_normalized(a);
    require_normalized(b);
    auto stc = swap_test_circuit(a, b);
    StateVector out = apply_circuit(stc.input, stc.circuit);
    int zeros = 0;
    for (uint64_t idx : sample_indices(out, shots, 0.0, seed)) {
        zeros += !((idx >> stc.ancilla) & 1);
    }
    return static_cast<double>(zeros) / shots;
}

SwapReport diversity_scan(std::span<const StateVector> states, std::span<const double> ce_values,
                          std::span<const double> bin_edges, int pairs_per_bin, int shots, uint64_t seed,
                          double threshold) {
    if (states.size() != ce_values.size() || states.size() < 2) {
        throw ContractViolation(fmt::format("diversity_scan needs >= 2 states with one CE value each ({} vs {})",
                                            states.size(), ce_values.size()));
    }
    if (bin_edges.size() < 2) {
        throw ContractViolation("diversity_scan needs at least two bin edges");
    }
    const size_t nbins = bin_edges.size() - 1;
    std::vector<std::vector<size_t>> members(nbins);
    for (size_t i = 0; i < ce_values.size(); ++i) {
        auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), ce_values[i]);
        size_t bin = it == bin_edges.begin() ? 0 : static_cast<size_t>(it - bin_edges.begin()) - 1;
        members[std::min(bin, nbins - 1)].push_back(i);
    }

    // Draw every pair before evaluating any of them.
    Rng rng(seed);
    std::vector<std::vector<std::pair<size_t, size_t>>> pairs(nbins);
    for (size_t b = 0; b < nbins; ++b) {
        auto& m = members[b];
        std::shuffle(m.begin(), m.end(), rng);
        const size_t count = std::min<size_t>(m.size() / 2, static_cast<size_t>(std::max(pairs_per_bin, 0)));
        for (size_t p = 0; p < count; ++p) {
            pairs[b].emplace_back(m[2 * p], m[2 * p + 1]);
        }
    }

    SwapReport report;
    report.threshold = threshold;
    double weighted = 0.0;
    uint64_t pair_id = 0;
    for (size_t b = 0; b < nbins; ++b) {
        SwapBin bin{bin_edges[b], bin_edges[b + 1], 0.0, static_cast<int>(pairs[b].size())};
        std::vector<double> p0(pairs[b].size());
#pragma omp parallel for schedule(static)
        for (long p = 0; p < static_cast<long>(pairs[b].size()); ++p) {
            const auto [i, j] = pairs[b][p];
            p0[p] = swap_test(states[i], states[j], shots, derive_seed(seed, pair_id + p));
        }
        pair_id += pairs[b].size();
        double sum = 0.0;
        for (double v : p0) {
            sum += v;
        }
        if (bin.pair_count > 0) {
            bin.mean_p0 = sum / bin.pair_count;
        }
        weighted += sum;
        report.total_pairs += bin.pair_count;
        report.bins.push_back(bin);
    }
    if (report.total_pairs > 0) {
        report.overall_mean_p0 = weighted / report.total_pairs;
    }
    report.collapsed = report.overall_mean_p0 > threshold;
    return report;
}

double diversity_penalty(const SwapReport& report, double weight) {
    if (!(weight >= 0.0)) {
        throw ContractViolation(fmt::format("diversity weight must be >= 0, got {}", weight));
    }
    return weight * std::max(0.0, report.overall_mean_p0 - report.threshold);
}

}  // namespace cegen
