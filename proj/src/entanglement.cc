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

#include "cegen/entanglement.h"

#include <bit>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "cegen/density.h"
#include "cegen/error.h"
#include "cegen/rng.h"
#include "cegen/simulator.h"

namespace cegen {

std::string_view method_name(CEMethod method) {
    switch (method) {
        case CEMethod::FullPowerset: return "full";
        case CEMethod::CeK: return "ce_k";
        case CEMethod::Nzp: return "nzp";
        case CEMethod::Ce1SwapBound: return "ce1";
    }
    return "?";
}

CEMethod parse_method(std::string_view text) {
    if (text == "full") return CEMethod::FullPowerset;
    if (text == "ce_k") return CEMethod::CeK;
    if (text == "nzp") return CEMethod::Nzp;
    if (text == "ce1") return CEMethod::Ce1SwapBound;
    throw ConfigError(fmt::format("unknown CE estimator '{}' (expected full, ce_k, nzp or ce1)", text));
}

CEEstimate ce_full(const StateVector& state) {
    const int n = state.num_qubits();
    if (n > kMaxFullCEQubits) {
        throw CapacityError(fmt::format(
            "full power-set CE on {} qubits exceeds the {}-qubit limit; use the ce_k, nzp or ce1 estimators", n,
            kMaxFullCEQubits));
    }
    require_normalized(state);
    const uint64_t full = (uint64_t{1} << n) - 1;
    // Pure state: Tr(rho_A^2) == Tr(rho_{A^c}^2), so each complementary pair
    // is computed once. The empty and full subsets each contribute 1.
    double sum = 2.0;
    for (uint64_t mask = 1; mask < full; ++mask) {
        if (mask < (full & ~mask)) {
            sum += 2.0 * subsystem_purity(state, mask);
        }
    }
    CEEstimate e;
    e.method = CEMethod::FullPowerset;
    e.value = std::max(0.0, 1.0 - sum / static_cast<double>(uint64_t{1} << n));
    return e;
}

CEEstimate ce_k(const StateVector& state, int k) {
    const int n = state.num_qubits();
    if (k < 1 || k > n - 1) {
        throw ContractViolation(fmt::format("ce_k needs 1 <= k <= {}, got k = {}", n - 1, k));
    }
    require_normalized(state);
    double sum = 0.0;
    int subsets = 0;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) == k) {
            sum += subsystem_purity(state, mask);
            ++subsets;
        }
    }
    const double weight = std::ldexp(1.0, k) / (std::ldexp(1.0, k) - 1.0);
    CEEstimate e;
    e.method = CEMethod::CeK;
    e.k = k;
    e.value = std::max(0.0, weight * (1.0 - sum / subsets));
    return e;
}

CEEstimate nzp(const StateVector& state) {
    require_normalized(state);
    CEEstimate e;
    e.method = CEMethod::Nzp;
    e.value = std::max(0.0, 1.0 - std::norm(state[0]));
    return e;
}

CEEstimate nzp_sampled(const StateVector& state, int shots, double p_readout, uint64_t seed) {
    int zeros = 0;
    for (uint64_t idx : sample_indices(state, shots, p_readout, seed)) {
        zeros += idx == 0;
    }
    CEEstimate e;
    e.method = CEMethod::Nzp;
    e.value = 1.0 - static_cast<double>(zeros) / shots;
    return e;
}

CEEstimate ce1_swap_bounds(const StateVector& state, int shots, uint64_t seed) {
    if (shots < 0) {
        throw ContractViolation(fmt::format("shots must be >= 0, got {}", shots));
    }
    require_normalized(state);
    const int n = state.num_qubits();
    double mean_p0 = 0.0;
    double q = 1.0;
    for (int j = 0; j < n; ++j) {
        double p0 = std::min(0.5 * (1.0 + subsystem_purity(state, uint64_t{1} << j)), 1.0);
        if (shots > 0) {
            Rng rng(derive_seed(seed, static_cast<uint64_t>(j)));
            std::binomial_distribution<int> ancilla_zero(shots, p0);
            p0 = static_cast<double>(ancilla_zero(rng)) / shots;
        }
        mean_p0 += p0 / n;
        q *= p0;
    }
    CEEstimate e;
    e.method = CEMethod::Ce1SwapBound;
    e.value = 4.0 * (1.0 - mean_p0);
    e.lower = 4.0 / n * (1.0 - q);
    e.upper = 4.0 * (1.0 - q);
    return e;
}

CEEstimate estimate_ce(const StateVector& state, const CEOptions& options, uint64_t seed) {
    switch (options.method) {
        case CEMethod::FullPowerset:
            return ce_full(state);
        case CEMethod::CeK:
            return ce_k(state, options.k);
        case CEMethod::Nzp:
            return options.shots > 0 ? nzp_sampled(state, options.shots, options.p_readout, seed) : nzp(state);
        case CEMethod::Ce1SwapBound:
            return ce1_swap_bounds(state, options.shots, seed);
    }
    throw ContractViolation("unknown CE method");
}

}  // namespace cegen
