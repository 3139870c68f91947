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

#include <cctype>

#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

namespace {

void validate(const AnsatzSpec& spec) {
    if (spec.num_qubits < 2) {
        throw StructuralError(fmt::format("ansatz needs at least 2 qubits, got {}", spec.num_qubits));
    }
    if (spec.layers < 1) {
        throw StructuralError(fmt::format("ansatz needs at least 1 layer, got {}", spec.layers));
    }
}

void append_layer(Circuit& c, AnsatzFamily family) {
    const int n = c.num_qubits();
    switch (family) {
        case AnsatzFamily::A1:
        case AnsatzFamily::A2:
            for (int q = 0; q < n; ++q) {
                c.rx(q, c.new_symbol());
                c.rz(q, c.new_symbol());
            }
            if (family == AnsatzFamily::A1) {
                for (int q = 0; q + 1 < n; ++q) {
                    c.crz(q, q + 1, c.new_symbol());
                }
            } else {
                for (int a = 0; a < n; ++a) {
                    for (int b = a + 1; b < n; ++b) {
                        c.crz(a, b, c.new_symbol());
                    }
                }
            }
            break;
        case AnsatzFamily::A3:
            for (int q = 0; q < n; ++q) {
                c.h(q);
            }
            for (int q = 0; q + 1 < n; ++q) {
                c.crx(q, q + 1, c.new_symbol());
            }
            for (int q = 0; q < n; ++q) {
                c.rz(q, c.new_symbol());
            }
            break;
        case AnsatzFamily::A4:
            for (int q = 0; q < n; ++q) {
                c.rx(q, c.new_symbol());
            }
            for (int q = 0; q + 1 < n; ++q) {
                c.cnot(q, q + 1);
            }
            for (int q = 0; q < n; ++q) {
                c.ry(q, c.new_symbol());
            }
            for (int q = 0; q + 1 < n; ++q) {
                c.crz(q, q + 1, c.new_symbol());
            }
            break;
    }
}

}  // namespace

std::string_view family_name(AnsatzFamily family) {
    switch (family) {
        case AnsatzFamily::A1: return "A1";
        case AnsatzFamily::A2: return "A2";
        case AnsatzFamily::A3: return "A3";
        case AnsatzFamily::A4: return "A4";
    }
    return "?";
}

AnsatzFamily parse_family(std::string_view text) {
    std::string t(text);
    for (auto& ch : t) {
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    if (t == "A1") return AnsatzFamily::A1;
    if (t == "A2") return AnsatzFamily::A2;
    if (t == "A3") return AnsatzFamily::A3;
    if (t == "A4") return AnsatzFamily::A4;
    throw ConfigError(fmt::format("unknown ansatz family '{}' (expected A1, A2, A3 or A4)", text));
}

Circuit build_ansatz(const AnsatzSpec& spec) {
    validate(spec);
    Circuit c(spec.num_qubits);
    for (int l = 0; l < spec.layers; ++l) {
        append_layer(c, spec.family);
    }
    return c;
}

int param_count(const AnsatzSpec& spec) {
    validate(spec);
    const int n = spec.num_qubits;
    int per_layer = 0;
    switch (spec.family) {
        case AnsatzFamily::A1: per_layer = 3 * n - 1; break;
        case AnsatzFamily::A2: per_layer = 2 * n + n * (n - 1) / 2; break;
        case AnsatzFamily::A3: per_layer = 2 * n - 1; break;
        case AnsatzFamily::A4: per_layer = 3 * n - 1; break;
    }
    return per_layer * spec.layers;
}

}  // namespace cegen
