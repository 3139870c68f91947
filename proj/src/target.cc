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

#include "cegen/target.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

namespace {

double normal_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

double weibull_cdf(double x, double shape, double scale) {
    return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / scale, shape));
}

std::vector<double> bin_masses(const std::vector<double>& edges, const std::function<double(double, double)>& mass) {
    std::vector<double> m(edges.size() - 1);
    double total = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        m[i] = std::max(0.0, mass(edges[i], edges[i + 1]));
        total += m[i];
    }
    if (!(total > 0.0)) {
        throw DegenerateInputError("target law places no mass on [0, ce_max]");
    }
    for (auto& v : m) {
        v /= total;
    }
    return m;
}

bool symmetric_about(const std::vector<double>& edges, double point) {
    for (size_t i = 0; i < edges.size(); ++i) {
        if (std::abs((edges[i] - point) + (edges[edges.size() - 1 - i] - point)) > 1e-12) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string_view target_name(TargetKind kind) {
    switch (kind) {
        case TargetKind::Uniform: return "uniform";
        case TargetKind::Gaussian: return "gaussian";
        case TargetKind::WeibullLeft: return "weibull_left";
        case TargetKind::WeibullRight: return "weibull_right";
        case TargetKind::Empirical: return "empirical";
    }
    return "?";
}

TargetKind parse_target(std::string_view text) {
    for (auto k : {TargetKind::Uniform, TargetKind::Gaussian, TargetKind::WeibullLeft, TargetKind::WeibullRight,
                   TargetKind::Empirical}) {
        if (target_name(k) == text) {
            return k;
        }
    }
    throw ConfigError(fmt::format(
        "unknown target '{}' (expected uniform, gaussian, weibull_left, weibull_right or empirical)", text));
}

TargetDistribution make_target(TargetKind kind, const TargetParams& params, double ce_max, int bins) {
    if (!(params.sigma > 0.0) || !(params.shape > 0.0) || !(params.scale > 0.0)) {
        throw ContractViolation("target sigma, shape and scale must be positive");
    }
    TargetDistribution t;
    t.kind = kind;
    t.params = params;
    t.ce_max = ce_max;
    t.histogram.bin_edges = uniform_edges(0.0, ce_max, bins);
    const auto& edges = t.histogram.bin_edges;
    const double r = params.reflect_point;
    switch (kind) {
        case TargetKind::Uniform:
            t.histogram.masses = bin_masses(edges, [](double a, double b) { return b - a; });
            break;
        case TargetKind::Gaussian:
            t.histogram.masses = bin_masses(edges, [&](double a, double b) {
                return normal_cdf(b, params.mu, params.sigma) - normal_cdf(a, params.mu, params.sigma);
            });
            break;
        case TargetKind::WeibullLeft:
            t.histogram.masses = bin_masses(edges, [&](double a, double b) {
                return weibull_cdf(b, params.shape, params.scale) - weibull_cdf(a, params.shape, params.scale);
            });
            break;
        case TargetKind::WeibullRight:
            if (symmetric_about(edges, r)) {
                // Mirror the left law bin for bin so the reflection is exact.
                auto left = make_target(TargetKind::WeibullLeft, params, ce_max, bins);
                t.histogram.masses.assign(left.masses().rbegin(), left.masses().rend());
            } else {
                t.histogram.masses = bin_masses(edges, [&](double a, double b) {
                    return weibull_cdf(2 * r - a, params.shape, params.scale) -
                           weibull_cdf(2 * r - b, params.shape, params.scale);
                });
            }
            break;
        case TargetKind::Empirical:
            throw ContractViolation("empirical targets are built from data with empirical_target()");
    }
    t.histogram.sample_count = 0;
    return t;
}

TargetDistribution empirical_target(std::span<const double> ce_values, double ce_max, int bins) {
    TargetDistribution t;
    t.kind = TargetKind::Empirical;
    t.ce_max = ce_max;
    auto edges = uniform_edges(0.0, ce_max, bins);
    t.histogram = histogram(ce_values, edges);
    return t;
}

}  // namespace cegen
