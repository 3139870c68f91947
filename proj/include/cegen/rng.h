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

#ifndef CEGEN_RNG_H
#define CEGEN_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace cegen {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used to decorrelate derived seeds.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// 64-bit FNV-1a.
constexpr uint64_t fnv1a(std::string_view text) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed for a named sub-component of a run rooted at `root`.
constexpr uint64_t derive_seed(uint64_t root, std::string_view component) {
    return mix64(root ^ mix64(fnv1a(component)));
}

/// Seed for the `index`-th task (sample, trajectory, iteration) under `parent`.
constexpr uint64_t derive_seed(uint64_t parent, uint64_t index) {
    return mix64(parent + mix64(index + 0x632BE59BD9B4E019ULL));
}

}  // namespace cegen

#endif
