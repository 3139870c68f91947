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

#ifndef CEGEN_ANSATZ_H
#define CEGEN_ANSATZ_H

#include <string>
#include <string_view>

#include "cegen/circuit.h"

namespace cegen {

/// The four low-depth ansatz families.
///
/// One layer of each family:
///   A1: RX, RZ on every qubit; CRZ on nearest neighbours (i, i+1).
///   A2: RX, RZ on every qubit; CRZ on every pair (i, j), i < j.
///   A3: H on every qubit; CRX on nearest neighbours; RZ on every qubit.
///   A4: RX on every qubit; CNOT on nearest neighbours; RY on every qubit;
///       CRZ on nearest neighbours.
/// Symbols are numbered in gate emission order.
enum class AnsatzFamily { A1, A2, A3, A4 };

std::string_view family_name(AnsatzFamily family);

/// Parses "A1".."A4" (case-insensitive). Throws ConfigError otherwise.
AnsatzFamily parse_family(std::string_view text);

struct AnsatzSpec {
    AnsatzFamily family = AnsatzFamily::A4;
    int num_qubits = 4;
    int layers = 1;
};

/// Throws StructuralError for num_qubits < 2 or layers < 1.
Circuit build_ansatz(const AnsatzSpec& spec);

/// Number of symbols build_ansatz(spec) reserves, without building it.
int param_count(const AnsatzSpec& spec);

}  // namespace cegen

#endif
