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

#ifndef CEGEN_ENTANGLEMENT_H
#define CEGEN_ENTANGLEMENT_H

#include <cstdint>
#include <optional>
#include <string_view>

#include "cegen/state_vector.h"

namespace cegen {

enum class CEMethod { FullPowerset, CeK, Nzp, Ce1SwapBound };

std::string_view method_name(CEMethod method);

/// Parses "full", "ce_k", "nzp" or "ce1". Throws ConfigError otherwise.
CEMethod parse_method(std::string_view text);

struct CEEstimate {
    double value = 0.0;
    CEMethod method = CEMethod::FullPowerset;
    std::optional<double> lower;
    std::optional<double> upper;
    std::optional<int> k;
};

/// Largest register ce_full accepts; the power set doubles per qubit.
inline constexpr int kMaxFullCEQubits = 12;

/// Concentratable entanglement over the full power set of qubits:
///
///     CE = 1 - 2^-n * sum_{alpha subset of [n]} Tr(rho_alpha^2)
///
/// with the empty subset contributing purity 1. Throws CapacityError above
/// kMaxFullCEQubits.
CEEstimate ce_full(const StateVector& state);

/// Size-k restricted CE, normalized to [0, 1]:
///
///     CE_k = 2^k / (2^k - 1) * (1 - mean_{|S| = k} Tr(rho_S^2))
///
/// Throws ContractViolation unless 1 <= k <= n - 1.
CEEstimate ce_k(const StateVector& state, int k);

/// 1 - P(0...0), analytic.
CEEstimate nzp(const StateVector& state);

/// 1 - P(0...0) estimated from `shots` computational-basis samples.
CEEstimate nzp_sampled(const StateVector& state, int shots, double p_readout, uint64_t seed);

/// Two-copy parallel single-qubit SWAP-test estimate of CE_1 with bounds.
///
/// Per qubit j the ancilla-zero probability is p0_j = (1 + Tr rho_j^2) / 2;
/// q is the product of the p0_j. Returns
///     value = 4 (1 - mean_j p0_j),  lower = (4/n)(1 - q),  upper = 4 (1 - q).
/// With shots > 0 each p0_j is replaced by a binomial estimate from `shots`
/// ancilla readouts; shots == 0 is exact mode.
CEEstimate ce1_swap_bounds(const StateVector& state, int shots, uint64_t seed);

/// Estimator selection used by the generator, datasets and sensors.
struct CEOptions {
    CEMethod method = CEMethod::FullPowerset;
    int k = 1;      // for CeK
    int shots = 0;  // 0 = analytic
    double p_readout = 0.0;
};

CEEstimate estimate_ce(const StateVector& state, const CEOptions& options, uint64_t seed);

}  // namespace cegen

#endif
