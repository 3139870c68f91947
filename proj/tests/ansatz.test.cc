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

#include "cegen/ansatz.h"

#include <set>

#include "gtest/gtest.h"

#include "cegen/entanglement.h"
#include "cegen/error.h"
#include "cegen/simulator.h"
#include "test_util.h"

using namespace cegen;
using namespace cegen::testing;

namespace {

const AnsatzFamily kFamilies[] = {AnsatzFamily::A1, AnsatzFamily::A2, AnsatzFamily::A3, AnsatzFamily::A4};

std::set<GateKind> alphabet(const Circuit& c) {
    std::set<GateKind> s;
    for (const auto& op : c.ops()) s.insert(op.kind);
    return s;
}

int entanglers(const Circuit& c) { return circuit_depth_report(c).multi_qubit_gates; }

}  // namespace

TEST(Ansatz, parameter_counts) {
    EXPECT_EQ(param_count({AnsatzFamily::A1, 4, 1}), 11);
    EXPECT_EQ(param_count({AnsatzFamily::A3, 4, 1}), 7);
    EXPECT_EQ(param_count({AnsatzFamily::A4, 4, 1}), 11);
    EXPECT_EQ(param_count({AnsatzFamily::A2, 4, 1}), 14);
    for (auto f : kFamilies) {
        for (int n = 2; n <= 6; ++n) {
            for (int l = 1; l <= 3; ++l) {
                AnsatzSpec s{f, n, l};
                EXPECT_EQ(build_ansatz(s).num_symbolic_params(), param_count(s));
            }
        }
    }
}

TEST(Ansatz, gate_alphabets) {
    EXPECT_EQ(alphabet(build_ansatz({AnsatzFamily::A1, 4, 1})),
              (std::set<GateKind>{GateKind::RX, GateKind::RZ, GateKind::CRZ}));
    EXPECT_EQ(alphabet(build_ansatz({AnsatzFamily::A2, 4, 1})),
              (std::set<GateKind>{GateKind::RX, GateKind::RZ, GateKind::CRZ}));
    auto a3 = alphabet(build_ansatz({AnsatzFamily::A3, 4, 1}));
    EXPECT_TRUE(a3.count(GateKind::H) && a3.count(GateKind::CRX));
    EXPECT_FALSE(a3.count(GateKind::CNOT));
    EXPECT_EQ(alphabet(build_ansatz({AnsatzFamily::A4, 4, 1})),
              (std::set<GateKind>{GateKind::RX, GateKind::RY, GateKind::CNOT, GateKind::CRZ}));
}

TEST(Ansatz, density_and_depth_ordering) {
    for (int n = 3; n <= 6; ++n) {
        EXPECT_GT(entanglers(build_ansatz({AnsatzFamily::A2, n, 1})), entanglers(build_ansatz({AnsatzFamily::A1, n, 1})));
        EXPECT_GE(circuit_depth_report(build_ansatz({AnsatzFamily::A4, n, 1})).depth,
                  circuit_depth_report(build_ansatz({AnsatzFamily::A3, n, 1})).depth);
    }
}

TEST(Ansatz, layers_repeat_the_layout) {
    auto one = build_ansatz({AnsatzFamily::A3, 4, 1});
    auto two = build_ansatz({AnsatzFamily::A3, 4, 2});
    ASSERT_EQ(two.ops().size(), 2 * one.ops().size());
    EXPECT_EQ(two.ops()[one.ops().size()].kind, one.ops()[0].kind);
}

TEST(Ansatz, zero_parameters_keep_product_for_rotation_families) {
    for (auto f : {AnsatzFamily::A1, AnsatzFamily::A2}) {
        auto c = build_ansatz({f, 4, 2});
        std::vector<double> zeros(c.num_symbolic_params(), 0.0);
        EXPECT_NEAR(ce_full(apply_circuit(StateVector(4), c, zeros)).value, 0.0, 1e-10);
    }
}

TEST(Ansatz, validation_and_names) {
    ASSERT_THROW(build_ansatz({AnsatzFamily::A1, 1, 1}), StructuralError);
    ASSERT_THROW(build_ansatz({AnsatzFamily::A1, 4, 0}), StructuralError);
    for (auto f : kFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_EQ(parse_family("a3"), AnsatzFamily::A3);
    ASSERT_THROW(parse_family("A5"), ConfigError);
}
