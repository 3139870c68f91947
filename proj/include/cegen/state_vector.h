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

#ifndef CEGEN_STATE_VECTOR_H
#define CEGEN_STATE_VECTOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cegen {

using Complex = std::complex<double>;

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 24;

/// Tolerance used when accepting a state as normalized.
inline constexpr double kNormTolerance = 1e-6;

/// Dense pure state of `num_qubits` qubits.
///
/// Qubit 0 is the least-significant bit of the basis-state index, so the
/// amplitude of |q_{n-1} ... q_1 q_0> lives at index sum_k q_k 2^k.
class StateVector {
   public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(int num_qubits);

    /// Takes ownership of `amplitudes`, which must have length 2^num_qubits.
    /// The norm is not checked here; consumers that need a normalized state
    /// call `require_normalized`.
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    static StateVector basis(int num_qubits, uint64_t index);

    /// Tensor product of single-qubit states; element k becomes qubit k.
    static StateVector product(std::span<const std::array<Complex, 2>> qubits);

    int num_qubits() const { return num_qubits_; }
    size_t dim() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }
    const Complex& operator[](size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;

    /// Probability of each basis state.
    std::vector<double> probabilities() const;

    bool operator==(const StateVector& other) const = default;

   private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Throws NumericalStateError if |norm^2 - 1| > tolerance.
void require_normalized(const StateVector& state, double tolerance = kNormTolerance);

/// <a|b>. Throws StructuralError on mismatched qubit counts.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |low> (x) |high>: `low` occupies the low-order qubits of the result.
StateVector tensor(const StateVector& low, const StateVector& high);

/// Amplitude encoding of a real feature vector of length 2^n - 1.
///
/// The features are padded with one trailing zero and L2-normalized.
/// Throws ShapeError if the length is not 2^n - 1 for some n >= 1 and
/// DegenerateInputError for an all-zero vector.
StateVector amplitude_encode(std::span<const double> features);

}  // namespace cegen

#endif
