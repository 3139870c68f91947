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

#ifndef CEGEN_GENERATOR_H
#define CEGEN_GENERATOR_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cegen/annealing.h"
#include "cegen/ansatz.h"
#include "cegen/diversity.h"
#include "cegen/entanglement.h"
#include "cegen/simulator.h"
#include "cegen/target.h"

namespace cegen {

/// Random product states, qubit by qubit
///     cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>,  phi ~ U(0, 2 pi),
/// with theta ~ U(0, pi) by default, or cos(theta) ~ U(-1, 1) (uniform on the
/// Bloch sphere) when `true_haar` is set.
std::vector<StateVector> sample_haar_product(int num_qubits, int count, uint64_t seed, bool true_haar = false);

struct GeneratorConfig {
    /// Optimizer schedule. Empty bounds are filled with
    /// [-angle_bound, angle_bound] per ansatz parameter.
    AnnealConfig anneal;
    double angle_bound = 6.283185307179586;
    int samples_per_eval = 200;
    int heldout_samples = 5000;
    /// After annealing, compass search on one fixed batch of this many
    /// inputs; 0 skips the refinement.
    int refine_samples = 2000;
    /// Lowest-scoring annealing evaluations re-scored on the refinement batch
    /// before the compass search starts from the best of them.
    int refine_candidates = 32;
    CEOptions ce;
    double diversity_weight = 1.0;
    double diversity_threshold = kDefaultCollapseThreshold;
    int penalty_pairs = 100;
    bool true_haar = false;
    uint64_t seed = 0;

    /// Throws ContractViolation on out-of-range values.
    void validate() const;
};

/// Objective terms for one parameter vector on one input batch.
struct ObjectiveBreakdown {
    double tvd = 0.0;
    double penalty = 0.0;
    double total = 0.0;
    double mean_p0 = 0.0;
    CEHistogram generated;
    std::vector<double> ce_values;
};

/// Everything the objective needs besides the parameters.
struct RunSpec {
    AnsatzSpec ansatz;
    TargetDistribution target;
    GeneratorConfig config;
};

/// Evaluates TVD(generated, target) + diversity penalty on `inputs`.
///
/// Each input is transformed by the bound ansatz, scored with the configured
/// CE estimator, binned on the target's edges and compared by TVD. The
/// penalty uses exact SWAP fidelities on up to `penalty_pairs` disjoint
/// random pairs drawn from `seed`.
ObjectiveBreakdown evaluate_objective(std::span<const double> params, const RunSpec& spec, const Circuit& circuit,
                                      std::span<const StateVector> inputs, uint64_t seed);

/// Objective on the input batch derived from (config.seed, batch).
double objective(std::span<const double> params, const RunSpec& spec, uint64_t batch);

/// Seed of the input batch used by objective(params, spec, batch).
uint64_t objective_batch_seed(const GeneratorConfig& config, uint64_t batch);

struct GenerationRun {
    RunSpec spec;
    std::vector<double> best_params;
    /// Lowest annealing cost; equals the minimum of cost_trace. Scored on
    /// 200-sample batches, so it is an optimistic estimate.
    double best_cost = 0.0;
    /// Objective of best_params on the fixed refinement batch, when refinement ran.
    std::optional<double> refined_cost;
    /// TVD of best_params on a held-out input ensemble.
    double final_tvd = 0.0;
    /// TVD of the all-zero parameter vector on the same held-out ensemble.
    double initial_tvd = 0.0;
    std::vector<double> cost_trace;
    long evaluations = 0;
    uint64_t seed = 0;
};

/// Dual-annealing search for ansatz parameters whose CE histogram matches
/// the target. Input batches are resampled per annealing iteration; the
/// incumbent is then refined on one fixed batch.
GenerationRun optimize_generator(const RunSpec& spec);

/// TVD of `params` on a fresh ensemble of `samples` inputs drawn from `seed`.
double heldout_tvd(const RunSpec& spec, std::span<const double> params, int samples, uint64_t seed);

struct Dataset {
    int num_qubits = 0;
    std::vector<StateVector> states;
    std::vector<double> ce_values;
    /// Optional secondary CE column (full power-set CE for sensor data).
    std::vector<double> ce_full;
    /// Ordered provenance key/value pairs.
    std::vector<std::pair<std::string, std::string>> metadata;

    size_t size() const { return states.size(); }
    std::optional<std::string> meta(const std::string& key) const;
};

/// Fresh inputs through the trained circuit, with CE recorded per state.
/// With `noise`, each state is one noisy trajectory seeded per sample.
Dataset generate_dataset(const GenerationRun& run, int count, uint64_t seed, int shots,
                         const std::optional<NoiseSpec>& noise);

/// Ranks with ties sharing the mean of the tied positions; rank 1 is the
/// smallest value.
std::vector<double> tied_ranks(std::span<const double> values);

struct ComparisonRow {
    AnsatzFamily family;
    std::vector<double> tvds;  // per target
    std::vector<double> ranks;  // per target
    double mean_tvd = 0.0;
    double median_tvd = 0.0;
    double tvd_variance = 0.0;  // population variance across targets
    double avg_rank = 0.0;
};

struct ComparisonTable {
    std::vector<std::string> target_names;
    std::vector<ComparisonRow> rows;
};

/// Summary statistics from a precomputed families x targets TVD matrix.
ComparisonTable summarize_comparison(std::span<const AnsatzFamily> families, std::vector<std::string> target_names,
                                     const std::vector<std::vector<double>>& tvd_by_family);

/// Trains every family on every target and tabulates held-out TVDs.
/// Throws ContractViolation for fewer than two families or no targets.
ComparisonTable compare_ansatzes(std::span<const TargetDistribution> targets, std::span<const AnsatzFamily> families,
                                 const AnsatzSpec& shape, const GeneratorConfig& config);

}  // namespace cegen

#endif
