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

#include "cegen/qml.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "cegen/error.h"
#include "cegen/rng.h"

namespace cegen {

namespace {

void check_sample(const LabeledSample& s) {
    if (s.features.size() != static_cast<size_t>(kClassifierFeatures)) {
        throw ShapeError(fmt::format("classifier samples need {} features, got {}", kClassifierFeatures,
                                     s.features.size()));
    }
    if (s.label != 0 && s.label != 1) {
        throw ContractViolation(fmt::format("labels must be 0 or 1, got {}", s.label));
    }
}

void check_dataset(std::span<const LabeledSample> dataset) {
    int ones = 0;
    for (const auto& s : dataset) {
        check_sample(s);
        ones += s.label;
    }
    if (ones == 0 || ones == static_cast<int>(dataset.size())) {
        throw DegenerateInputError("classifier dataset needs both classes");
    }
}

double label_target(int label) { return label == 0 ? 1.0 : -1.0; }

// Mean of per-sample terms, summed in index order.
template <typename Term>
double ordered_mean(long count, Term term) {
    std::vector<double> v(count);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        v[i] = term(i);
    }
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(count);
}

struct Classifier {
    const ClassifierSpec& spec;
    const QmlConfig& config;
    Circuit variational;
    std::vector<StateVector> encoded;

    Classifier(std::span<const LabeledSample> dataset, const ClassifierSpec& spec, const QmlConfig& config)
        : spec(spec), config(config), variational(variational_circuit(spec)) {
        if (!config.noise) {
            encoded.reserve(dataset.size());
            for (const auto& s : dataset) {
                encoded.push_back(apply_circuit(StateVector(kClassifierQubits), feature_map_circuit(s.features)));
            }
        }
    }

    double expectation(const LabeledSample& s, size_t i, const Circuit& bound, std::span<const double> params,
                       uint64_t seed, int trajectories) const {
        if (!config.noise) {
            return expectation_z(apply_circuit(encoded[i], bound), 0);
        }
        return classifier_expectation(s.features, params, spec, config.noise, seed, trajectories);
    }
};

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct Standardizer {
    std::vector<double> mean;
    std::vector<double> scale;

    Standardizer(std::span<const LabeledSample> dataset, std::span<const size_t> rows)
        : mean(kClassifierFeatures, 0.0), scale(kClassifierFeatures, 0.0) {
        for (size_t r : rows) {
            for (int f = 0; f < kClassifierFeatures; ++f) {
                mean[f] += dataset[r].features[f] / rows.size();
            }
        }
        for (size_t r : rows) {
            for (int f = 0; f < kClassifierFeatures; ++f) {
                const double d = dataset[r].features[f] - mean[f];
                scale[f] += d * d / rows.size();
            }
        }
        for (auto& s : scale) {
            s = s > 0.0 ? std::sqrt(s) : 1.0;
        }
    }

    double operator()(const LabeledSample& s, int f) const { return (s.features[f] - mean[f]) / scale[f]; }
};

}  // namespace

Circuit feature_map_circuit(std::span<const double> features) {
    if (features.size() != static_cast<size_t>(kClassifierFeatures)) {
        throw ShapeError(
            fmt::format("feature map takes {} features, got {}", kClassifierFeatures, features.size()));
    }
    for (double f : features) {
        if (!std::isfinite(f)) {
            throw ShapeError("feature map got a non-finite feature");
        }
    }
    Circuit c(kClassifierQubits);
    for (int q = 0; q < kClassifierQubits; ++q) {
        c.ry(q, features[3 * q]);
        c.rx(q, features[3 * q + 1]);
        c.rz(q, features[3 * q + 2]);
    }
    return c;
}

Circuit variational_circuit(const ClassifierSpec& spec) {
    if (spec.ansatz_reps < 0) {
        throw ContractViolation(fmt::format("ansatz_reps must be >= 0, got {}", spec.ansatz_reps));
    }
    Circuit c(kClassifierQubits);
    for (int r = 0; r <= spec.ansatz_reps; ++r) {
        for (int q = 0; q < kClassifierQubits; ++q) {
            c.ry(q, c.new_symbol());
        }
        if (r == spec.ansatz_reps) {
            break;
        }
        for (int a = 0; a < kClassifierQubits; ++a) {
            for (int b = a + 1; b < kClassifierQubits; ++b) {
                c.cnot(a, b);
            }
        }
    }
    return c;
}

int classifier_param_count(const ClassifierSpec& spec) { return kClassifierQubits * (spec.ansatz_reps + 1); }

double classifier_expectation(std::span<const double> features, std::span<const double> params,
                              const ClassifierSpec& spec, const std::optional<NoiseSpec>& noise, uint64_t seed,
                              int trajectories) {
    Circuit full = feature_map_circuit(features);
    full.extend(variational_circuit(spec));
    if (!noise) {
        return expectation_z(apply_circuit(StateVector(kClassifierQubits), full, params), 0);
    }
    noise->validate();
    if (trajectories < 1) {
        throw ContractViolation(fmt::format("trajectories must be >= 1, got {}", trajectories));
    }
    double sum = 0.0;
    for (int t = 0; t < trajectories; ++t) {
        sum += expectation_z(
            apply_circuit_noisy(StateVector(kClassifierQubits), full, params, *noise, derive_seed(seed, t)), 0);
    }
    return (1.0 - 2.0 * noise->p_readout) * sum / trajectories;
}

TrainResult train(std::span<const LabeledSample> dataset, const ClassifierSpec& spec, const QmlConfig& config) {
    if (dataset.empty()) {
        throw DegenerateInputError("cannot train on an empty dataset");
    }
    check_dataset(dataset);
    const Classifier model(dataset, spec, config);
    const int dim = classifier_param_count(spec);

    AnnealConfig anneal = config.anneal;
    if (anneal.bounds.empty()) {
        anneal.bounds.assign(dim, Interval{-std::numbers::pi, std::numbers::pi});
    }
    if (static_cast<int>(anneal.bounds.size()) != dim) {
        throw ParameterCountError(fmt::format("{} bounds given for {} classifier parameters", anneal.bounds.size(), dim));
    }
    anneal.seed = derive_seed(config.seed, "anneal");
    anneal.reevaluate_current = config.noise.has_value();
    const uint64_t noise_seed = derive_seed(config.seed, "train-noise");

    BatchedObjective loss = [&](std::span<const double> x, uint64_t batch) {
        const Circuit bound = bind(model.variational, x);
        const uint64_t batch_seed = derive_seed(noise_seed, batch);
        return ordered_mean(static_cast<long>(dataset.size()), [&](long i) {
            const double e = model.expectation(dataset[i], i, bound, x, derive_seed(batch_seed, i),
                                               config.train_trajectories) -
                             label_target(dataset[i].label);
            return e * e;
        });
    };
    AnnealResult r = dual_annealing(loss, anneal);
    return {std::move(r.best_x), r.best_cost, std::move(r.cost_trace)};
}

std::vector<int> predict(std::span<const LabeledSample> dataset, std::span<const double> params,
                         const ClassifierSpec& spec, const QmlConfig& config) {
    for (const auto& s : dataset) {
        check_sample(s);
    }
    const Classifier model(dataset, spec, config);
    const Circuit bound = bind(model.variational, params);
    const uint64_t eval_seed = derive_seed(config.seed, "eval-noise");
    std::vector<int> out(dataset.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(dataset.size()); ++i) {
        const double z =
            model.expectation(dataset[i], i, bound, params, derive_seed(eval_seed, i), config.eval_trajectories);
        out[i] = z < spec.decision_threshold ? 1 : 0;
    }
    return out;
}

FoldMetrics score_predictions(std::span<const int> labels, std::span<const int> predictions) {
    if (labels.size() != predictions.size() || labels.empty()) {
        throw ContractViolation(
            fmt::format("cannot score {} predictions against {} labels", predictions.size(), labels.size()));
    }
    int tp = 0, fp = 0, fn = 0, correct = 0;
    for (size_t i = 0; i < labels.size(); ++i) {
        correct += labels[i] == predictions[i];
        tp += labels[i] == 1 && predictions[i] == 1;
        fp += labels[i] == 0 && predictions[i] == 1;
        fn += labels[i] == 1 && predictions[i] == 0;
    }
    FoldMetrics m;
    m.accuracy = static_cast<double>(correct) / labels.size();
    m.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
    m.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
    m.f1 = m.precision + m.recall > 0 ? 2 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    return m;
}

std::vector<int> stratified_folds(std::span<const LabeledSample> dataset, int folds, uint64_t seed) {
    if (folds < 2) {
        throw ContractViolation(fmt::format("need at least 2 folds, got {}", folds));
    }
    if (dataset.size() < static_cast<size_t>(folds)) {
        throw ContractViolation(fmt::format("{} samples cannot fill {} folds", dataset.size(), folds));
    }
    std::vector<int> fold(dataset.size(), -1);
    Rng rng(derive_seed(seed, "folds"));
    for (int label : {0, 1}) {
        std::vector<size_t> members;
        for (size_t i = 0; i < dataset.size(); ++i) {
            check_sample(dataset[i]);
            if (dataset[i].label == label) {
                members.push_back(i);
            }
        }
        if (members.size() < static_cast<size_t>(folds)) {
            throw DegenerateInputError(fmt::format("class {} has {} samples, too few to stratify into {} folds", label,
                                                   members.size(), folds));
        }
        std::shuffle(members.begin(), members.end(), rng);
        for (size_t k = 0; k < members.size(); ++k) {
            fold[members[k]] = static_cast<int>(k % folds);
        }
    }
    return fold;
}

namespace {

template <typename FitPredict>
CVReport run_folds(std::span<const LabeledSample> dataset, int folds, uint64_t seed, FitPredict fit_predict) {
    const std::vector<int> fold = stratified_folds(dataset, folds, seed);
    CVReport report;
    report.mean.fold_index = -1;
    for (int f = 0; f < folds; ++f) {
        std::vector<LabeledSample> train_set, test_set;
        for (size_t i = 0; i < dataset.size(); ++i) {
            (fold[i] == f ? test_set : train_set).push_back(dataset[i]);
        }
        std::vector<int> labels;
        for (const auto& s : test_set) {
            labels.push_back(s.label);
        }
        FoldMetrics m = score_predictions(labels, fit_predict(train_set, test_set, f));
        m.fold_index = f;
        report.per_fold.push_back(m);
        report.mean.accuracy += m.accuracy / folds;
        report.mean.precision += m.precision / folds;
        report.mean.recall += m.recall / folds;
        report.mean.f1 += m.f1 / folds;
    }
    return report;
}

}  // namespace

CVReport cross_validate(std::span<const LabeledSample> dataset, const ClassifierSpec& spec, const QmlConfig& config,
                        int folds, uint64_t seed) {
    return run_folds(dataset, folds, seed,
                     [&](const std::vector<LabeledSample>& train_set, const std::vector<LabeledSample>& test_set,
                         int f) {
                         QmlConfig fold_config = config;
                         fold_config.seed = derive_seed(derive_seed(seed, "fold"), static_cast<uint64_t>(f));
                         const TrainResult fit = train(train_set, spec, fold_config);
                         return predict(test_set, fit.params, spec, fold_config);
                     });
}

CVReport logistic_baseline(std::span<const LabeledSample> dataset, int folds, uint64_t seed,
                           const LogisticConfig& config) {
    return run_folds(dataset, folds, seed,
                     [&](const std::vector<LabeledSample>& train_set, const std::vector<LabeledSample>& test_set,
                         int) {
                         check_dataset(train_set);
                         std::vector<size_t> rows(train_set.size());
                         std::iota(rows.begin(), rows.end(), 0);
                         const Standardizer z(train_set, rows);
                         std::vector<double> w(kClassifierFeatures, 0.0);
                         double b = 0.0;
                         const double m = static_cast<double>(train_set.size());
                         for (int epoch = 0; epoch < config.epochs; ++epoch) {
                             std::vector<double> gw(kClassifierFeatures, 0.0);
                             double gb = 0.0;
                             for (const auto& s : train_set) {
                                 double u = b;
                                 for (int f = 0; f < kClassifierFeatures; ++f) {
                                     u += w[f] * z(s, f);
                                 }
                                 const double r = sigmoid(u) - s.label;
                                 for (int f = 0; f < kClassifierFeatures; ++f) {
                                     gw[f] += r * z(s, f) / m;
                                 }
                                 gb += r / m;
                             }
                             for (int f = 0; f < kClassifierFeatures; ++f) {
                                 w[f] -= config.step * (gw[f] + config.l2 * w[f]);
                             }
                             b -= config.step * gb;
                         }
                         std::vector<int> out;
                         for (const auto& s : test_set) {
                             double u = b;
                             for (int f = 0; f < kClassifierFeatures; ++f) {
                                 u += w[f] * z(s, f);
                             }
                             out.push_back(sigmoid(u) >= 0.5 ? 1 : 0);
                         }
                         return out;
                     });
}

std::vector<LabeledSample> blocked_samples(std::span<const double> low, std::span<const double> high, int per_class) {
    if (per_class < 1) {
        throw ContractViolation(fmt::format("per_class must be >= 1, got {}", per_class));
    }
    const size_t need = static_cast<size_t>(per_class) * kClassifierFeatures;
    if (low.size() < need || high.size() < need) {
        throw DegenerateInputError(fmt::format("{} samples per class need {} CE values per ensemble, got {} and {}",
                                               per_class, need, low.size(), high.size()));
    }
    std::vector<LabeledSample> out;
    for (int label : {0, 1}) {
        const auto& src = label == 0 ? low : high;
        for (int s = 0; s < per_class; ++s) {
            const auto block = src.subspan(static_cast<size_t>(s) * kClassifierFeatures, kClassifierFeatures);
            out.push_back({std::vector<double>(block.begin(), block.end()), label});
        }
    }
    return out;
}

}  // namespace cegen
