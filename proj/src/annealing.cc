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

#include "cegen/annealing.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "cegen/error.h"
#include "cegen/rng.h"

namespace cegen {

namespace {

constexpr double kTailLimit = 1e8;
constexpr double kMinVisitBound = 1e-10;

// Tsallis visiting distribution of generalized simulated annealing.
class VisitingDistribution {
   public:
    VisitingDistribution(const std::vector<Interval>& bounds, double qv, Rng& rng)
        : bounds_(bounds), qv_(qv), rng_(rng) {
        const double pi = std::numbers::pi;
        const double factor2 = std::exp((4.0 - qv_) * std::log(qv_ - 1.0));
        const double factor3 = std::exp((2.0 - qv_) * std::log(2.0) / (qv_ - 1.0));
        factor4_p_ = std::sqrt(pi) * factor2 / (factor3 * (3.0 - qv_));
        const double factor5 = 1.0 / (qv_ - 1.0) - 0.5;
        const double d1 = 2.0 - factor5;
        factor6_ = pi * (1.0 - factor5) / std::sin(pi * (1.0 - factor5)) / std::exp(std::lgamma(d1));
    }

    // Step j < dim moves every coordinate; step j >= dim moves coordinate j - dim.
    std::vector<double> visit(const std::vector<double>& x, size_t step, double temperature) {
        const size_t dim = x.size();
        std::vector<double> out = x;
        if (step < dim) {
            std::vector<double> jumps(dim);
            for (auto& v : jumps) {
                v = draw(temperature);
            }
            const double upper_sample = unit_(rng_);
            const double lower_sample = unit_(rng_);
            for (size_t i = 0; i < dim; ++i) {
                double v = jumps[i];
                if (v > kTailLimit) {
                    v = kTailLimit * upper_sample;
                } else if (v < -kTailLimit) {
                    v = -kTailLimit * lower_sample;
                }
                out[i] = wrap(x[i] + v, i);
            }
        } else {
            const size_t i = step - dim;
            double v = draw(temperature);
            if (v > kTailLimit) {
                v = kTailLimit * unit_(rng_);
            } else if (v < -kTailLimit) {
                v = -kTailLimit * unit_(rng_);
            }
            out[i] = wrap(x[i] + v, i);
        }
        return out;
    }

   private:
    double draw(double temperature) {
        const double gx = normal_(rng_);
        const double gy = normal_(rng_);
        const double factor1 = std::exp(std::log(temperature) / (qv_ - 1.0));
        const double factor4 = factor4_p_ * factor1;
        const double sigma = std::exp(-(qv_ - 1.0) * std::log(factor6_ / factor4) / (3.0 - qv_));
        const double den = std::exp((qv_ - 1.0) * std::log(std::abs(gy)) / (3.0 - qv_));
        return gx * sigma / den;
    }

    // Periodic folding back into [low, high).
    double wrap(double v, size_t i) const {
        const double low = bounds_[i].low;
        const double range = bounds_[i].high - low;
        double a = std::fmod(v - low, range) + range;
        double out = std::fmod(a, range) + low;
        if (std::abs(out - low) < kMinVisitBound) {
            out += kMinVisitBound;
        }
        return out;
    }

    const std::vector<Interval>& bounds_;
    double qv_;
    Rng& rng_;
    double factor4_p_;
    double factor6_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::vector<double> random_point(const std::vector<Interval>& bounds, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(bounds.size());
    for (size_t i = 0; i < x.size(); ++i) {
        x[i] = bounds[i].low + (bounds[i].high - bounds[i].low) * unit(rng);
    }
    return x;
}

struct Counted {
    const BatchedObjective& f;
    long evaluations = 0;

    double operator()(const std::vector<double>& x, uint64_t batch) {
        ++evaluations;
        double v = f(x, batch);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    }
};

// Compass search: try +/- step along each axis, halve the step after a sweep
// without improvement.
std::pair<std::vector<double>, double> coordinate_descent(Counted& f, const std::vector<Interval>& bounds,
                                                          std::vector<double> x, double fx, uint64_t batch,
                                                          int budget) {
    std::vector<double> step(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        step[i] = 0.1 * (bounds[i].high - bounds[i].low);
    }
    const long start = f.evaluations;
    while (f.evaluations - start < budget) {
        bool improved = false;
        for (size_t i = 0; i < x.size() && f.evaluations - start < budget; ++i) {
            for (double dir : {1.0, -1.0}) {
                std::vector<double> trial = x;
                trial[i] = std::clamp(x[i] + dir * step[i], bounds[i].low, bounds[i].high);
                if (trial[i] == x[i]) {
                    continue;
                }
                const double ft = f(trial, batch);
                if (ft < fx) {
                    x = std::move(trial);
                    fx = ft;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            bool resolved = true;
            for (size_t i = 0; i < step.size(); ++i) {
                step[i] *= 0.5;
                resolved &= step[i] < 1e-7 * (bounds[i].high - bounds[i].low);
            }
            if (resolved) {
                break;
            }
        }
    }
    return {std::move(x), fx};
}

}  // namespace

void AnnealConfig::validate() const {
    if (bounds.empty()) {
        throw ContractViolation("annealing needs at least one bounded parameter");
    }
    for (const auto& b : bounds) {
        if (!(b.high > b.low) || !std::isfinite(b.low) || !std::isfinite(b.high)) {
            throw ContractViolation(fmt::format("invalid bound [{}, {}]", b.low, b.high));
        }
    }
    if (max_iterations < 0) {
        throw ContractViolation(fmt::format("max_iterations must be >= 0, got {}", max_iterations));
    }
    if (!(visiting_shape > 1.0 && visiting_shape < 3.0)) {
        throw ContractViolation(fmt::format("visiting shape must lie in (1, 3), got {}", visiting_shape));
    }
    if (!(acceptance_shape < 1.0)) {
        throw ContractViolation(fmt::format("acceptance shape must be < 1, got {}", acceptance_shape));
    }
    if (!(initial_temperature > 0.0)) {
        throw ContractViolation("initial temperature must be positive");
    }
    if (initial_point && initial_point->size() != bounds.size()) {
        throw ContractViolation("initial point dimension does not match bounds");
    }
}

AnnealResult dual_annealing(const BatchedObjective& objective, const AnnealConfig& config) {
    config.validate();
    const size_t dim = config.bounds.size();
    Rng rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Counted f{objective};
    VisitingDistribution visiting(config.bounds, config.visiting_shape, rng);

    std::vector<double> current = config.initial_point ? *config.initial_point : random_point(config.bounds, rng);
    double current_energy = f(current, 0);
    std::vector<double> best = current;
    double best_energy = current_energy;

    AnnealResult result;
    const double qa = config.acceptance_shape;
    const double t1 = std::exp((config.visiting_shape - 1.0) * std::log(2.0)) - 1.0;
    const double restart_temperature = config.initial_temperature * config.restart_temperature_ratio;

    int iteration = 0;
    while (iteration < config.max_iterations) {
        // One temperature schedule; a restart begins a new one.
        for (int i = 0; iteration < config.max_iterations; ++i) {
            const double s = i + 2.0;
            const double t2 = std::exp((config.visiting_shape - 1.0) * std::log(s)) - 1.0;
            const double temperature = config.initial_temperature * t1 / t2;
            if (temperature < restart_temperature) {
                current = random_point(config.bounds, rng);
                current_energy = f(current, iteration);
                ++result.restarts;
                break;
            }
            if (config.reevaluate_current && iteration > 0) {
                current_energy = f(current, iteration);
            }
            const double temperature_step = temperature / (i + 1.0);
            for (size_t j = 0; j < 2 * dim; ++j) {
                std::vector<double> candidate = visiting.visit(current, j, temperature);
                const double energy = f(candidate, iteration);
                if (energy < current_energy) {
                    current = candidate;
                    current_energy = energy;
                    if (energy < best_energy) {
                        best = std::move(candidate);
                        best_energy = energy;
                    }
                    continue;
                }
                // Generalized Metropolis rule.
                const double r = unit(rng);
                const double base = 1.0 - (1.0 - qa) * (energy - current_energy) / temperature_step;
                const double accept = base <= 0.0 ? 0.0 : std::exp(std::log(base) / (1.0 - qa));
                if (r <= accept) {
                    current = std::move(candidate);
                    current_energy = energy;
                }
            }
            ++iteration;
            result.cost_trace.push_back(best_energy);
        }
    }
    result.iterations = iteration;

    if (config.local_search && config.max_iterations > 0) {
        const int budget = config.local_search_budget > 0 ? config.local_search_budget : 60 * static_cast<int>(dim);
        const auto batch = static_cast<uint64_t>(config.max_iterations);
        const double start_energy = config.reevaluate_current ? f(best, batch) : best_energy;
        auto [x, fx] = coordinate_descent(f, config.bounds, best, start_energy, batch, budget);
        if (fx < best_energy) {
            best = std::move(x);
            best_energy = fx;
        }
        result.cost_trace.push_back(best_energy);
    }

    result.best_x = std::move(best);
    result.best_cost = best_energy;
    result.evaluations = f.evaluations;
    return result;
}

LocalSearchResult compass_search(const Objective& objective, const std::vector<Interval>& bounds,
                                 std::vector<double> x0, int budget) {
    if (x0.size() != bounds.size()) {
        throw ContractViolation(fmt::format("start point has {} coordinates, bounds have {}", x0.size(), bounds.size()));
    }
    const BatchedObjective batched = [&](std::span<const double> x, uint64_t) { return objective(x); };
    Counted f{batched};
    const double f0 = f(x0, 0);
    auto [x, fx] = coordinate_descent(f, bounds, std::move(x0), f0, 0, budget);
    return {std::move(x), fx, f.evaluations};
}

AnnealResult dual_annealing(const Objective& objective, const AnnealConfig& config) {
    return dual_annealing(BatchedObjective([&](std::span<const double> x, uint64_t) { return objective(x); }), config);
}

}  // namespace cegen
