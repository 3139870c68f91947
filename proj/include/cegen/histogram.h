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

#ifndef CEGEN_HISTOGRAM_H
#define CEGEN_HISTOGRAM_H

#include <span>
#include <vector>

namespace cegen {

/// Normalized binned distribution of CE values.
///
/// Bins are right-open except the last, which is closed.
struct CEHistogram {
    std::vector<double> bin_edges;
    std::vector<double> masses;
    int sample_count = 0;
    /// Values outside [first edge, last edge] that were folded into the
    /// boundary bins.
    int clamped = 0;

    size_t num_bins() const { return masses.size(); }
};

/// `bins` equal-width bins over [low, high].
std::vector<double> uniform_edges(double low, double high, int bins);

/// Bins `values` with the given edges and normalizes to unit mass.
///
/// Throws DegenerateInputError for an empty input or a non-finite value and
/// ContractViolation for fewer than two edges or unsorted edges.
CEHistogram histogram(std::span<const double> values, std::span<const double> bin_edges);

/// Half the L1 distance between the two mass vectors. Throws
/// ContractViolation unless both histograms share the same edges.
double tvd(const CEHistogram& p, const CEHistogram& q);

}  // namespace cegen

#endif
