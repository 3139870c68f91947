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

#ifndef CEGEN_TARGET_H
#define CEGEN_TARGET_H

#include <span>
#include <string_view>
#include <vector>

#include "cegen/histogram.h"

namespace cegen {

enum class TargetKind { Uniform, Gaussian, WeibullLeft, WeibullRight, Empirical };

std::string_view target_name(TargetKind kind);

/// Parses "uniform", "gaussian", "weibull_left", "weibull_right" or
/// "empirical". Throws ConfigError otherwise.
TargetKind parse_target(std::string_view text);

struct TargetParams {
    double mu = 0.2;
    double sigma = 0.05;
    double shape = 1.2;   // Weibull k
    double scale = 0.05;  // Weibull lambda
    double reflect_point = 0.2;
};

inline constexpr double kDefaultCEMax = 0.4;
inline constexpr int kDefaultBins = 20;

/// Target CE density binned over [0, ce_max].
///
/// Masses are the exact probability of each bin under the named law,
/// truncated to [0, ce_max] and renormalized. WeibullRight is WeibullLeft
/// reflected across `reflect_point`.
struct TargetDistribution {
    TargetKind kind = TargetKind::Gaussian;
    TargetParams params;
    double ce_max = kDefaultCEMax;
    CEHistogram histogram;

    const std::vector<double>& bin_edges() const { return histogram.bin_edges; }
    const std::vector<double>& masses() const { return histogram.masses; }
};

/// Analytic target. Throws ContractViolation for Empirical (use
/// empirical_target) or for non-positive sigma/shape/scale.
TargetDistribution make_target(TargetKind kind, const TargetParams& params = {}, double ce_max = kDefaultCEMax,
                               int bins = kDefaultBins);

/// Target given by a sample of CE values binned with the standard edges.
TargetDistribution empirical_target(std::span<const double> ce_values, double ce_max = kDefaultCEMax,
                                    int bins = kDefaultBins);

}  // namespace cegen

#endif
