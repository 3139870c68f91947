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

#include "cegen/density.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

namespace {

// Spreads the low bits of `compact` onto the positions listed in `positions`.
uint64_t deposit(uint64_t compact, std::span<const int> positions) {
    uint64_t out = 0;
    for (size_t k = 0; k < positions.size(); ++k) {
        out |= ((compact >> k) & 1) << positions[k];
    }
    return out;
}

DensityMatrix reduce(const StateVector& state, uint64_t keep_mask) {
    std::vector<int> kept;
    std::vector<int> traced;
    for (int q = 0; q < state.num_qubits(); ++q) {
        ((keep_mask >> q) & 1 ? kept : traced).push_back(q);
    }
    const size_t dk = size_t{1} << kept.size();
    const size_t de = size_t{1} << traced.size();
    std::vector<uint64_t> kept_offsets(dk);
    std::vector<uint64_t> env_offsets(de);
    for (size_t r = 0; r < dk; ++r) {
        kept_offsets[r] = deposit(r, kept);
    }
    for (size_t e = 0; e < de; ++e) {
        env_offsets[e] = deposit(e, traced);
    }
    DensityMatrix rho(dk);
    auto amps = state.amplitudes();
    for (size_t r = 0; r < dk; ++r) {
        for (size_t c = r; c < dk; ++c) {
            Complex acc{};
            for (size_t e = 0; e < de; ++e) {
                acc += amps[kept_offsets[r] | env_offsets[e]] * std::conj(amps[kept_offsets[c] | env_offsets[e]]);
            }
            rho(r, c) = acc;
            rho(c, r) = std::conj(acc);
        }
    }
    return rho;
}

double hermitian_purity(const DensityMatrix& rho) {
    double total = 0.0;
    for (const auto& x : rho.data()) {
        total += std::norm(x);
    }
    return total;
}

}  // namespace

Complex DensityMatrix::trace() const {
    Complex t{};
    for (size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
    if (keep.empty()) {
        throw ContractViolation("partial_trace needs at least one kept qubit");
    }
    uint64_t mask = 0;
    for (int q : keep) {
        if (q < 0 || q >= state.num_qubits()) {
            throw ContractViolation(fmt::format("kept qubit {} out of range for {} qubits", q, state.num_qubits()));
        }
        mask |= uint64_t{1} << q;
    }
    return reduce(state, mask);
}

double purity(const DensityMatrix& rho) {
    const Complex t = rho.trace();
    if (std::abs(t - Complex{1.0, 0.0}) > 1e-6) {
        throw NumericalStateError(fmt::format("density matrix trace {:.12g}{:+.3g}i is not 1", t.real(), t.imag()));
    }
    return hermitian_purity(rho);
}

double subsystem_purity(const StateVector& state, uint64_t mask) {
    const int n = state.num_qubits();
    const uint64_t full = (n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    mask &= full;
    const uint64_t complement = full & ~mask;
    if (mask == 0 || complement == 0) {
        const double n2 = state.norm_squared();
        return n2 * n2;
    }
    // A pure bipartite state has equal purity on both sides of the cut.
    const uint64_t side = std::popcount(mask) <= std::popcount(complement) ? mask : complement;
    return hermitian_purity(reduce(state, side));
}

}  // namespace cegen
