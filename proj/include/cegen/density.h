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

#ifndef CEGEN_DENSITY_H
#define CEGEN_DENSITY_H

#include <cstdint>
#include <span>
#include <vector>

#include "cegen/state_vector.h"

namespace cegen {

/// Row-major square complex matrix.
class DensityMatrix {
   public:
    explicit DensityMatrix(size_t dim) : dim_(dim), data_(dim * dim) {}

    size_t dim() const { return dim_; }
    Complex& operator()(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(size_t r, size_t c) const { return data_[r * dim_ + c]; }
    std::span<const Complex> data() const { return data_; }

    Complex trace() const;

   private:
    size_t dim_;
    std::vector<Complex> data_;
};

/// Reduced density matrix of `state` on the qubits in `keep`.
///
/// Kept qubits are re-indexed in ascending order, so the lowest kept qubit is
/// the least-significant bit of the reduced index. Throws ContractViolation
/// for an empty or out-of-range `keep`.
DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep);

/// Tr(rho^2). Throws NumericalStateError if |Tr(rho) - 1| > 1e-6.
double purity(const DensityMatrix& rho);

/// Tr(rho_S^2) of a pure state for the subsystem given as a qubit bitmask.
///
/// Computes the Gram matrix on whichever side of the cut is smaller; the
/// empty mask returns 1. The state is assumed normalized.
double subsystem_purity(const StateVector& state, uint64_t mask);

}  // namespace cegen

#endif
