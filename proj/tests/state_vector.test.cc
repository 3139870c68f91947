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

#include "gtest/gtest.h"

#include "cegen/error.h"
#include "test_util.h"

using namespace cegen;
using namespace cegen::testing;

TEST(StateVector, zero_state) {
    StateVector s(3);
    ASSERT_EQ(s.dim(), 8u);
    ASSERT_EQ(s[0], Complex(1.0));
    ASSERT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, basis_index_is_little_endian) {
    auto s = StateVector::basis(3, 0b110);
    ASSERT_EQ(s[6], Complex(1.0));
    ASSERT_THROW(StateVector::basis(3, 8), StructuralError);
}

TEST(StateVector, product_places_element_k_on_qubit_k) {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<std::array<Complex, 2>> q{{0.0, 1.0}, {r, r}};
    auto s = StateVector::product(q);
    // |+>_1 (x) |1>_0: amplitudes on indices 1 and 3.
    EXPECT_NEAR(std::abs(s[1] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[3] - r), 0.0, 1e-15);
    EXPECT_EQ(s[0], Complex(0.0));
}

TEST(StateVector, wrong_length_is_rejected) {
    ASSERT_THROW(StateVector(2, std::vector<Complex>(3)), ShapeError);
}

TEST(StateVector, require_normalized) {
    StateVector ok(2);
    require_normalized(ok);
    StateVector bad(1, {1.0, 1.0});
    ASSERT_THROW(require_normalized(bad), NumericalStateError);
}

TEST(StateVector, tensor_puts_low_on_low_qubits) {
    auto low = StateVector::basis(1, 1);
    auto high = StateVector::basis(2, 0b10);
    auto t = tensor(low, high);
    ASSERT_EQ(t.num_qubits(), 3);
    ASSERT_EQ(t[0b101], Complex(1.0));
}

TEST(StateVector, inner_product) {
    auto rng = test_rng(1);
    auto a = random_state(3, rng);
    auto b = random_state(3, rng);
    EXPECT_NEAR(std::abs(inner_product(a, a) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))), 0.0, 1e-12);
    ASSERT_THROW(inner_product(a, StateVector(2)), StructuralError);
}

TEST(AmplitudeEncode, pads_and_normalizes) {
    std::vector<double> f{3.0, 0.0, 4.0};
    auto s = amplitude_encode(f);
    ASSERT_EQ(s.num_qubits(), 2);
    EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
    EXPECT_NEAR(s[2].real(), 0.8, 1e-15);
    EXPECT_EQ(s[3], Complex(0.0));
}

TEST(AmplitudeEncode, one_feature_is_one_qubit) {
    std::vector<double> f{-2.0};
    auto s = amplitude_encode(f);
    ASSERT_EQ(s.num_qubits(), 1);
    EXPECT_NEAR(s[0].real(), -1.0, 1e-15);
}

TEST(AmplitudeEncode, errors) {
    std::vector<double> four(4, 1.0), zeros(3, 0.0), none;
    ASSERT_THROW(amplitude_encode(four), ShapeError);
    ASSERT_THROW(amplitude_encode(none), ShapeError);
    ASSERT_THROW(amplitude_encode(zeros), DegenerateInputError);
}

TEST(AmplitudeEncode, always_unit_norm) {
    auto rng = test_rng(2);
    std::normal_distribution<double> g;
    for (int n = 1; n <= 5; ++n) {
        std::vector<double> f((1 << n) - 1);
        for (auto& x : f) x = g(rng);
        EXPECT_NEAR(amplitude_encode(f).norm_squared(), 1.0, 1e-12);
    }
}
