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

#ifndef CEGEN_ANNEALING_H
#define CEGEN_ANNEALING_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cegen {

struct Interval {
    double low;
    double high;
};

/// Generalized simulated annealing schedule.
///
/// The defaults are the customary dual-annealing settings: visiting shape
/// q_v = 2.62, acceptance shape q_a = -5, initial temperature 5230, restart
/// when the temperature falls below 2e-5 of the initial value.
struct AnnealConfig {
    std::vector<Interval> bounds;
    int max_iterations = 1000;
    double initial_temperature = 5230.0;
    double visiting_shape = 2.62;
    double acceptance_shape = -5.0;
    double restart_temperature_ratio = 2e-5;
    /// Coordinate-descent refinement of the incumbent after the last iteration.
    bool local_search = true;
    /// Evaluation budget of the refinement; 0 picks 60 per dimension.
    int local_search_budget = 0;
    /// Re-score the current point at the start of every iteration. Needed
    /// when the objective draws a fresh sample per iteration.
    bool reevaluate_current = false;
    uint64_t seed = 0;
    /// Starting point; drawn uniformly inside the bounds when absent.
    std::optional<std::vector<double>> initial_point;

    /// Throws ContractViolation on empty/inverted bounds, negative iteration
    /// count, q_v outside (1, 3), or q_a >= 1.
    void validate() const;
};

/// Objective receiving the point and a batch index. The batch index is the
/// annealing iteration (and max_iterations for the final refinement), so a
/// stochastic objective can draw one common sample per iteration.
using BatchedObjective = std::function<double(std::span<const double>, uint64_t batch)>;
using Objective = std::function<double(std::span<const double>)>;

struct AnnealResult {
    std::vector<double> best_x;
    double best_cost = 0.0;
    /// Running best after each iteration, plus one entry for the refinement
    /// when it ran. Non-increasing; its minimum equals best_cost.
    std::vector<double> cost_trace;
    long evaluations = 0;
    int iterations = 0;
    int restarts = 0;
};

/// Dual annealing: heavy-tailed (Tsallis) visiting moves, generalized
/// Metropolis acceptance, GSA temperature decay, optional final local
/// refinement. Deterministic for a fixed seed. A zero iteration budget
/// returns the starting point and its cost.
AnnealResult dual_annealing(const BatchedObjective& objective, const AnnealConfig& config);
AnnealResult dual_annealing(const Objective& objective, const AnnealConfig& config);

struct LocalSearchResult {
    std::vector<double> x;
    double cost = 0.0;
    long evaluations = 0;
};

/// Compass search from `x0` inside `bounds`: +/- steps of 0.1 of the box
/// width along each axis, halved after a sweep without improvement. Never
/// returns a point worse than `x0` on `objective`.
LocalSearchResult compass_search(const Objective& objective, const std::vector<Interval>& bounds,
                                 std::vector<double> x0, int budget);

}  // namespace cegen

#endif
