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

#ifndef CEGEN_QML_H
#define CEGEN_QML_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cegen/annealing.h"
#include "cegen/circuit.h"
#include "cegen/simulator.h"

namespace cegen {

inline constexpr int kClassifierQubits = 3;
inline constexpr int kClassifierFeatures = 3 * kClassifierQubits;

struct LabeledSample {
    std::vector<double> features;  // exactly kClassifierFeatures
    int label = 0;                 // 0 or 1
};

struct ClassifierSpec {
    int ansatz_reps = 2;
    /// Predict label 1 when <Z_0> < decision_threshold.
    double decision_threshold = 0.0;
};

/// Qubit q receives RY(f[3q]), RX(f[3q+1]), RZ(f[3q+2]). Throws ShapeError
/// unless there are exactly 9 finite features.
Circuit feature_map_circuit(std::span<const double> features);

/// `ansatz_reps` times (RY on every qubit, CNOT on (0,1), (0,2), (1,2)), then
/// a trailing RY layer. Symbolic.
Circuit variational_circuit(const ClassifierSpec& spec);

int classifier_param_count(const ClassifierSpec& spec);

/// <Z_0> after the feature map and the bound variational circuit.
///
/// With `noise`, the value is the mean over `trajectories` Monte-Carlo
/// trajectories of the gate-noise channel, scaled by (1 - 2 p_readout) for
/// the readout flip of qubit 0.
double classifier_expectation(std::span<const double> features, std::span<const double> params,
                              const ClassifierSpec& spec, const std::optional<NoiseSpec>& noise = std::nullopt,
                              uint64_t seed = 0, int trajectories = 256);

struct QmlConfig {
    /// Empty bounds become [-pi, pi] per parameter.
    AnnealConfig anneal;
    std::optional<NoiseSpec> noise;
    /// Trajectories per expectation while training and while scoring folds.
    int train_trajectories = 16;
    int eval_trajectories = 256;
    uint64_t seed = 0;

    QmlConfig() { anneal.max_iterations = 150; }
};

struct TrainResult {
    std::vector<double> params;
    double cost = 0.0;
    std::vector<double> cost_trace;
};

/// Dual-annealing fit of the MSE between <Z_0> and +1 (label 0) / -1 (label 1).
/// Throws DegenerateInputError for an empty or single-class dataset.
TrainResult train(std::span<const LabeledSample> dataset, const ClassifierSpec& spec, const QmlConfig& config);

std::vector<int> predict(std::span<const LabeledSample> dataset, std::span<const double> params,
                         const ClassifierSpec& spec, const QmlConfig& config);

struct FoldMetrics {
    int fold_index = -1;  // -1 for the mean over folds
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Metrics with label 1 as the positive class.
FoldMetrics score_predictions(std::span<const int> labels, std::span<const int> predictions);

struct CVReport {
    std::vector<FoldMetrics> per_fold;
    FoldMetrics mean;
};

/// Fold id per sample: each class is shuffled and dealt round-robin, so every
/// fold sees both classes. Throws DegenerateInputError if a class has fewer
/// members than there are folds.
std::vector<int> stratified_folds(std::span<const LabeledSample> dataset, int folds, uint64_t seed);

CVReport cross_validate(std::span<const LabeledSample> dataset, const ClassifierSpec& spec, const QmlConfig& config,
                        int folds = 5, uint64_t seed = 0);

struct LogisticConfig {
    double l2 = 1e-3;
    double step = 0.1;
    int epochs = 500;
};

/// L2-regularized logistic regression by full-batch gradient descent on
/// features standardized per training fold; same folds as cross_validate.
CVReport logistic_baseline(std::span<const LabeledSample> dataset, int folds = 5, uint64_t seed = 0,
                           const LogisticConfig& config = {});

/// Cuts each CE ensemble into consecutive blocks of 9 values; the first
/// `per_class` blocks of `low` get label 0, those of `high` label 1.
/// Throws DegenerateInputError if an ensemble is too short.
std::vector<LabeledSample> blocked_samples(std::span<const double> low, std::span<const double> high,
                                           int per_class = 200);

}  // namespace cegen

#endif
