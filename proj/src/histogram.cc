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

#include "cegen/histogram.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

std::vector<double> uniform_edges(double low, double high, int bins) {
    if (bins < 1 || !(high > low)) {
        throw ContractViolation(fmt::format("bad binning: {} bins over [{}, {}]", bins, low, high));
    }
    std::vector<double> edges(bins + 1);
    const double width = (high - low) / bins;
    for (int i = 0; i <= bins; ++i) {
        edges[i] = low + width * i;
    }
    edges[bins] = high;
    return edges;
}

CEHistogram histogram(std::span<const double> values, std::span<const double> bin_edges) {
    if (bin_edges.size() < 2) {
        throw ContractViolation("histogram needs at least two bin edges");
    }
    for (size_t i = 1; i < bin_edges.size(); ++i) {
        if (!(bin_edges[i] > bin_edges[i - 1])) {
            throw ContractViolation("histogram bin edges must be strictly increasing");
        }
    }
    if (values.empty()) {
        throw DegenerateInputError("histogram of an empty sample");
    }
    CEHistogram h;
    h.bin_edges.assign(bin_edges.begin(), bin_edges.end());
    const size_t bins = bin_edges.size() - 1;
    std::vector<int> counts(bins, 0);
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw DegenerateInputError("histogram received a non-finite value");
        }
        size_t bin;
        if (v < bin_edges.front()) {
            bin = 0;
            ++h.clamped;
        } else if (v >= bin_edges.back()) {
            bin = bins - 1;
            if (v > bin_edges.back()) {
                ++h.clamped;
            }
        } else {
            bin = static_cast<size_t>(std::upper_bound(bin_edges.begin(), bin_edges.end(), v) - bin_edges.begin()) - 1;
        }
        ++counts[bin];
    }
    h.sample_count = static_cast<int>(values.size());
    h.masses.resize(bins);
    for (size_t i = 0; i < bins; ++i) {
        h.masses[i] = static_cast<double>(counts[i]) / h.sample_count;
    }
    return h;
}

double tvd(const CEHistogram& p, const CEHistogram& q) {
    if (p.bin_edges.size() != q.bin_edges.size() || p.masses.size() != q.masses.size()) {
        throw ContractViolation("tvd of histograms with different binning");
    }
    for (size_t i = 0; i < p.bin_edges.size(); ++i) {
        if (std::abs(p.bin_edges[i] - q.bin_edges[i]) > 1e-12) {
            throw ContractViolation(fmt::format("tvd: bin edge {} differs ({} vs {})", i, p.bin_edges[i], q.bin_edges[i]));
        }
    }
    double total = 0.0;
    for (size_t i = 0; i < p.masses.size(); ++i) {
        total += std::abs(p.masses[i] - q.masses[i]);
    }
    return std::clamp(0.5 * total, 0.0, 1.0);
}

}  // namespace cegen
