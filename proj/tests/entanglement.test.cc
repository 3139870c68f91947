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

#include "gtest/gtest.h"

#include "cegen/ansatz.h"
#include "cegen/density.h"
#include "cegen/error.h"
#include "cegen/simulator.h"
#include "test_util.h"

using namespace cegen;
using namespace cegen::testing;

namespace {

double mean_single_purity(const StateVector& s) {
    double p = 0.0;
    for (int q = 0; q < s.num_qubits(); ++q) p += brute_purity(s, {q}) / s.num_qubits();
    return p;
}

StateVector random_circuit_output(int n, Rng& rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    AnsatzSpec spec{static_cast<AnsatzFamily>(rng() % 4), n, 1 + static_cast<int>(rng() % 2)};
    const Circuit c = build_ansatz(spec);
    std::vector<double> p(c.num_symbolic_params());
    for (auto& x : p) x = angle(rng);
    return apply_circuit(random_product(n, rng), c, p);
}

}  // namespace

TEST(CEFull, bell_and_ghz3) {
    EXPECT_NEAR(ce_full(ghz(2)).value, 0.25, 1e-10);
    EXPECT_NEAR(ce_full(ghz(3)).value, 0.375, 1e-10);
}

TEST(CEFull, ghz_closed_form) {
    for (int n = 2; n <= 8; ++n) {
        EXPECT_NEAR(ce_full(ghz(n)).value, 0.5 - std::ldexp(1.0, -n), 1e-10) << n;
    }
}

TEST(CEFull, products_are_zero) {
    auto rng = test_rng(30);
    for (int trial = 0; trial < 100; ++trial) {
        EXPECT_NEAR(ce_full(random_product(1 + trial % 7, rng)).value, 0.0, 1e-10);
    }
}

TEST(CEFull, matches_subset_enumeration) {
    auto rng = test_rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto psi = random_state(1 + trial % 6, rng);
        EXPECT_NEAR(ce_full(psi).value, brute_ce(psi), 1e-12);
    }
}

TEST(CEFull, range_and_capacity) {
    auto rng = test_rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const double v = ce_full(random_state(2 + trial % 5, rng)).value;
        EXPECT_GE(v, -1e-12);
        EXPECT_LT(v, 1.0);
    }
    ASSERT_THROW(ce_full(StateVector(kMaxFullCEQubits + 1)), CapacityError);
}

TEST(CEFull, entangled_pair_is_positive) {
    auto rng = test_rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        auto pair = random_state(2, rng);
        auto s = tensor(pair, random_product(2, rng));
        EXPECT_GT(ce_full(s).value, 1e-6);
    }
}

TEST(CEK, examples) {
    EXPECT_NEAR(ce_k(ghz(2), 1).value, 1.0, 1e-12);
    EXPECT_NEAR(ce_k(ghz(3), 1).value, 1.0, 1e-12);
    auto rng = test_rng(34);
    for (int k = 1; k < 5; ++k) EXPECT_NEAR(ce_k(random_product(5, rng), k).value, 0.0, 1e-12);
    ASSERT_THROW(ce_k(ghz(3), 0), ContractViolation);
    ASSERT_THROW(ce_k(ghz(3), 3), ContractViolation);
    EXPECT_EQ(ce_k(ghz(3), 2).k, 2);
}

TEST(CEK, matches_size_k_enumeration) {
    auto rng = test_rng(35);
    auto psi = random_state(5, rng);
    for (int k = 1; k < 5; ++k) {
        double sum = 0.0;
        int count = 0;
        for (uint64_t m = 0; m < 32; ++m) {
            if (std::popcount(m) != k) continue;
            std::vector<int> keep;
            for (int q = 0; q < 5; ++q)
                if (m >> q & 1) keep.push_back(q);
            sum += brute_purity(psi, keep);
            ++count;
        }
        const double norm = std::ldexp(1.0, k) / (std::ldexp(1.0, k) - 1.0);
        EXPECT_NEAR(ce_k(psi, k).value, norm * (1.0 - sum / count), 1e-12);
    }
}

TEST(NZP, examples) {
    EXPECT_NEAR(nzp(StateVector(3)).value, 0.0, 1e-15);
    EXPECT_NEAR(nzp(ghz(2)).value, 0.5, 1e-15);
    for (int n = 1; n <= 5; ++n) {
        Circuit c(n);
        for (int q = 0; q < n; ++q) c.h(q);
        EXPECT_NEAR(nzp(apply_circuit(StateVector(n), c)).value, 1.0 - std::ldexp(1.0, -n), 1e-12);
    }
}

TEST(NZP, sampled_estimate_is_consistent) {
    const int shots = 100000;
    const double v = nzp_sampled(ghz(3), shots, 0.0, 4).value;
    EXPECT_NEAR(v, 0.5, 5 * std::sqrt(0.25 / shots));
}

TEST(CE1, examples) {
    auto bell = ce1_swap_bounds(ghz(2), 0, 0);
    EXPECT_NEAR(bell.value, 1.0, 1e-12);
    EXPECT_NEAR(*bell.lower, 0.875, 1e-12);
    EXPECT_NEAR(*bell.upper, 4.0 * 7.0 / 16.0, 1e-12);
    auto g3 = ce1_swap_bounds(ghz(3), 0, 0);
    EXPECT_NEAR(g3.value, 1.0, 1e-12);
    EXPECT_NEAR(*g3.lower, 4.0 / 3.0 * (1.0 - 27.0 / 64.0), 1e-12);
    EXPECT_NEAR(*g3.upper, 4.0 * (1.0 - 27.0 / 64.0), 1e-12);
    auto rng = test_rng(36);
    auto prod = ce1_swap_bounds(random_product(4, rng), 0, 0);
    EXPECT_NEAR(prod.value, 0.0, 1e-12);
    EXPECT_NEAR(*prod.lower, 0.0, 1e-12);
    EXPECT_NEAR(*prod.upper, 0.0, 1e-12);
}

TEST(CE1, equals_size_one_ce_on_circuit_outputs) {
    auto rng = test_rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        auto psi = random_circuit_output(4, rng);
        const double v = ce1_swap_bounds(psi, 0, 0).value;
        ASSERT_NEAR(v, ce_k(psi, 1).value, 1e-9);
        ASSERT_NEAR(v, 2.0 * (1.0 - mean_single_purity(psi)), 1e-9);
    }
}

TEST(CE1, exact_bounds_contain_value) {
    auto rng = test_rng(38);
    for (int trial = 0; trial < 1000; ++trial) {
        auto e = ce1_swap_bounds(random_circuit_output(2 + trial % 4, rng), 0, 0);
        ASSERT_LE(*e.lower, e.value + 1e-12);
        ASSERT_LE(e.value, *e.upper + 1e-12);
    }
}

TEST(CE1, sampled_estimate_within_binomial_slack) {
    auto rng = test_rng(39);
    const int shots = 2048;
    int inside = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        auto psi = random_circuit_output(4, rng);
        const double exact = ce1_swap_bounds(psi, 0, 0).value;
        auto e = ce1_swap_bounds(psi, shots, trial);
        // value = 4 (1 - mean p0); each p0 is a binomial mean.
        double var = 0.0;
        for (int q = 0; q < 4; ++q) {
            const double p0 = (1 + brute_purity(psi, {q})) / 2;
            var += p0 * (1 - p0) / shots;
        }
        const double sigma = 4.0 / 4.0 * std::sqrt(var);
        inside += std::abs(e.value - exact) <= 4 * sigma + 1e-12;
        EXPECT_LE(*e.lower, e.value + 1e-12);
        EXPECT_LE(e.value, *e.upper + 1e-12);
    }
    EXPECT_GE(inside, trials - 2);
}

TEST(CE, local_unitary_invariance) {
    auto rng = test_rng(40);
    std::uniform_real_distribution<double> angle(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        auto psi = random_state(4, rng);
        Circuit local(4);
        for (int q = 0; q < 4; ++q) local.rz(q, angle(rng)).ry(q, angle(rng)).rx(q, angle(rng));
        auto phi = apply_circuit(psi, local);
        EXPECT_NEAR(ce_full(psi).value, ce_full(phi).value, 1e-9);
        EXPECT_NEAR(ce_k(psi, 2).value, ce_k(phi, 2).value, 1e-9);
        EXPECT_NEAR(ce1_swap_bounds(psi, 0, 0).value, ce1_swap_bounds(phi, 0, 0).value, 1e-9);
    }
}

TEST(CE, method_names_round_trip) {
    for (auto m : {CEMethod::FullPowerset, CEMethod::CeK, CEMethod::Nzp, CEMethod::Ce1SwapBound}) {
        EXPECT_EQ(parse_method(method_name(m)), m);
    }
    ASSERT_THROW(parse_method("bogus"), ConfigError);
}

TEST(CE, estimate_dispatch) {
    auto s = ghz(3);
    EXPECT_EQ(estimate_ce(s, {CEMethod::FullPowerset}, 0).value, ce_full(s).value);
    EXPECT_EQ(estimate_ce(s, {CEMethod::CeK, 2}, 0).value, ce_k(s, 2).value);
    EXPECT_EQ(estimate_ce(s, {CEMethod::Nzp}, 0).value, nzp(s).value);
    EXPECT_EQ(estimate_ce(s, {CEMethod::Ce1SwapBound}, 0).value, ce1_swap_bounds(s, 0, 0).value);
}
