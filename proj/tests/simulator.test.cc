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

#include "cegen/simulator.h"

#include "gtest/gtest.h"

#include "cegen/error.h"
#include "test_util.h"

using namespace cegen;
using namespace cegen::testing;

namespace {

const std::vector<GateKind> kAllGates{GateKind::RX,   GateKind::RY,  GateKind::RZ,  GateKind::H,    GateKind::X,
                                      GateKind::CNOT, GateKind::CRX, GateKind::CRZ, GateKind::CSWAP};

}  // namespace

TEST(Simulator, every_gate_matches_dense_matrix) {
    auto rng = test_rng(10);
    std::uniform_real_distribution<double> angle(-4, 4);
    for (GateKind kind : kAllGates) {
        const int arity = gate_arity(kind);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 4;
            std::vector<int> all{0, 1, 2, 3};
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> targets(all.begin(), all.begin() + arity);
            const double t = gate_is_parameterized(kind) ? angle(rng) : 0.0;
            auto psi = random_state(n, rng);
            auto expected = apply_dense(psi, local_matrix(kind, t), targets);
            auto got = psi;
            apply_gate(got, kind, targets, t);
            ASSERT_LT(max_abs_diff(got, expected), 1e-12) << gate_name(kind);
        }
    }
}

TEST(Simulator, bell_pair) {
    Circuit c(2);
    c.h(0).cnot(0, 1);
    auto s = apply_circuit(StateVector(2), c);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s[0] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[3] - r), 0.0, 1e-15);
}

TEST(Simulator, rx_pi_flips) {
    Circuit c(1);
    c.rx(0, std::numbers::pi);
    auto s = apply_circuit(StateVector(1), c);
    EXPECT_NEAR(std::norm(s[1]), 1.0, 1e-15);
    EXPECT_NEAR(expectation_z(s, 0), -1.0, 1e-15);
}

TEST(Simulator, unitary_gates_preserve_norm) {
    auto rng = test_rng(11);
    std::uniform_real_distribution<double> angle(-4, 4);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(kAllGates.size()) - 1);
    for (int trial = 0; trial < 200; ++trial) {
        Circuit c(5);
        for (int g = 0; g < 30; ++g) {
            GateKind kind = kAllGates[pick(rng)];
            std::vector<int> q{0, 1, 2, 3, 4};
            std::shuffle(q.begin(), q.end(), rng);
            c.append({kind, {q[0], gate_arity(kind) > 1 ? q[1] : -1, gate_arity(kind) > 2 ? q[2] : -1},
                      gate_is_parameterized(kind) ? Angle(angle(rng)) : Angle()});
        }
        EXPECT_NEAR(apply_circuit(random_state(5, rng), c).norm_squared(), 1.0, 1e-10);
    }
}

TEST(Simulator, parameter_and_size_checks) {
    Circuit c(2);
    c.rx(0, c.new_symbol());
    ASSERT_THROW(apply_circuit(StateVector(2), c), ParameterCountError);
    std::vector<double> p{0.1};
    ASSERT_THROW(apply_circuit(StateVector(3), c, p), StructuralError);
}

TEST(Simulator, zero_noise_is_bit_identical) {
    auto rng = test_rng(12);
    Circuit c(3);
    c.h(0).cnot(0, 1).crx(1, 2, 0.7).ry(2, 1.1).cswap(2, 0, 1);
    auto psi = random_state(3, rng);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(apply_circuit_noisy(psi, c, {}, NoiseSpec::none(), seed), apply_circuit(psi, c));
    }
}

TEST(Simulator, certain_noise_changes_state_and_keeps_norm) {
    Circuit c(2);
    c.h(0).cnot(0, 1);
    NoiseSpec always{1.0, 1.0, 0.0};
    auto clean = apply_circuit(StateVector(2), c);
    int changed = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto noisy = apply_circuit_noisy(StateVector(2), c, {}, always, seed);
        EXPECT_NEAR(noisy.norm_squared(), 1.0, 1e-12);
        changed += std::norm(inner_product(clean, noisy)) < 1 - 1e-9;
    }
    EXPECT_GT(changed, 0);
}

TEST(Simulator, noise_spec_validation) {
    NoiseSpec bad{1.5, 0.0, 0.0};
    ASSERT_THROW(bad.validate(), ContractViolation);
    NoiseSpec{}.validate();
}

TEST(Simulator, bitstring_order) {
    EXPECT_EQ(bitstring(0b001, 3), "001");
    EXPECT_EQ(bitstring(0b110, 3), "110");
}

TEST(Simulator, sample_counts_of_basis_state) {
    auto s = StateVector::basis(3, 0b011);
    auto r = sample_counts(s, 100, std::nullopt, 1);
    EXPECT_EQ(r.shots, 100);
    EXPECT_EQ(r.count("011"), 100);
    EXPECT_EQ(r.count("000"), 0);
    ASSERT_THROW(sample_counts(s, 0, std::nullopt, 1), ContractViolation);
    StateVector bad(1, {1.0, 1.0});
    ASSERT_THROW(sample_counts(bad, 10, std::nullopt, 1), NumericalStateError);
}

TEST(Simulator, sample_frequencies_follow_born_rule) {
    auto rng = test_rng(13);
    auto psi = random_state(3, rng);
    const int shots = 200000;
    auto r = sample_counts(psi, shots, std::nullopt, 99);
    auto p = psi.probabilities();
    for (uint64_t k = 0; k < 8; ++k) {
        const double sigma = std::sqrt(p[k] * (1 - p[k]) / shots);
        EXPECT_NEAR(r.count(bitstring(k, 3)) / double(shots), p[k], 5 * sigma + 1e-9);
    }
}

TEST(Simulator, readout_flips_at_configured_rate) {
    NoiseSpec n{0.0, 0.0, 0.1};
    auto r = sample_counts(StateVector(1), 100000, n, 5);
    EXPECT_NEAR(r.count("1") / 100000.0, 0.1, 5 * std::sqrt(0.09 / 100000));
}

TEST(Simulator, sampling_is_deterministic) {
    auto rng = test_rng(14);
    auto psi = random_state(4, rng);
    EXPECT_EQ(sample_indices(psi, 500, 0.02, 7), sample_indices(psi, 500, 0.02, 7));
}

TEST(Simulator, expectation_z_matches_probabilities) {
    auto rng = test_rng(15);
    auto psi = random_state(3, rng);
    auto p = psi.probabilities();
    for (int q = 0; q < 3; ++q) {
        double z = 0.0;
        for (size_t k = 0; k < p.size(); ++k) z += (k >> q & 1 ? -1.0 : 1.0) * p[k];
        EXPECT_NEAR(expectation_z(psi, q), z, 1e-12);
    }
}
