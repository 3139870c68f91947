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

#include "cegen/state_vector.h"

#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

namespace {

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError(fmt::format("register of {} qubits outside supported range [1, {}]", num_qubits, kMaxQubits));
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amplitudes_.assign(size_t{1} << num_qubits, Complex{});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits);
    if (amplitudes_.size() != (size_t{1} << num_qubits)) {
        throw ShapeError(fmt::format("{} amplitudes given for {} qubits (need {})", amplitudes_.size(), num_qubits,
                                     size_t{1} << num_qubits));
    }
}

StateVector StateVector::basis(int num_qubits, uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.dim()) {
        throw StructuralError(fmt::format("basis index {} out of range for {} qubits", index, num_qubits));
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

StateVector StateVector::product(std::span<const std::array<Complex, 2>> qubits) {
    const int n = static_cast<int>(qubits.size());
    check_qubit_count(n);
    std::vector<Complex> amps(size_t{1} << n);
    amps[0] = 1.0;
    size_t filled = 1;
    for (int k = 0; k < n; ++k) {
        // Doubling pass: entries [filled, 2*filled) get the |1> branch of qubit k.
        for (size_t i = 0; i < filled; ++i) {
            amps[i + filled] = amps[i] * qubits[k][1];
            amps[i] *= qubits[k][0];
        }
        filled <<= 1;
    }
    return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(amplitudes_[i]);
    }
    return p;
}

void require_normalized(const StateVector& state, double tolerance) {
    double n2 = state.norm_squared();
    if (!(std::abs(n2 - 1.0) <= tolerance)) {
        throw NumericalStateError(fmt::format("state norm^2 = {:.12g} deviates from 1 by more than {:g}", n2, tolerance));
    }
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw StructuralError(fmt::format("inner product of {}- and {}-qubit states", a.num_qubits(), b.num_qubits()));
    }
    Complex acc{};
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

StateVector tensor(const StateVector& low, const StateVector& high) {
    const int n = low.num_qubits() + high.num_qubits();
    check_qubit_count(n);
    std::vector<Complex> amps(size_t{1} << n);
    const size_t dl = low.dim();
    for (size_t h = 0; h < high.dim(); ++h) {
        for (size_t l = 0; l < dl; ++l) {
            amps[h * dl + l] = high[h] * low[l];
        }
    }
    return StateVector(n, std::move(amps));
}

StateVector amplitude_encode(std::span<const double> features) {
    const size_t padded = features.size() + 1;
    if (features.empty() || !std::has_single_bit(padded)) {
        throw ShapeError(fmt::format("amplitude encoding needs 2^n - 1 features, got {}", features.size()));
    }
    const int n = std::countr_zero(padded);
    double norm2 = 0.0;
    for (double f : features) {
        if (!std::isfinite(f)) {
            throw DegenerateInputError("amplitude encoding received a non-finite feature");
        }
        norm2 += f * f;
    }
    if (norm2 == 0.0) {
        throw DegenerateInputError("amplitude encoding of the zero vector");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    std::vector<Complex> amps(padded);
    for (size_t i = 0; i < features.size(); ++i) {
        amps[i] = features[i] * scale;
    }
    return StateVector(n, std::move(amps));
}

}  // namespace cegen
