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

#include <numeric>
#include <set>

#include "gtest/gtest.h"

#include "cegen/error.h"
#include "test_util.h"

using namespace cegen;
using namespace cegen::testing;

namespace {

std::vector<double> with_first(double v, int slot = 0) {
    std::vector<double> f(kClassifierFeatures, 0.0);
    f[slot] = v;
    return f;
}

// Two well separated clusters in the feature-map angle of qubit 0.
std::vector<LabeledSample> toy_data(int per_class, uint64_t salt) {
    auto rng = test_rng(salt);
    std::normal_distribution<double> jitter(0.0, 0.15);
    std::vector<LabeledSample> out;
    for (int label : {0, 1}) {
        for (int i = 0; i < per_class; ++i) {
            std::vector<double> f(kClassifierFeatures);
            for (auto& x : f) x = 0.2 + jitter(rng);
            f[0] = (label ? 2.6 : 0.4) + jitter(rng);
            out.push_back({f, label});
        }
    }
    return out;
}

QmlConfig quick_config(int iterations) {
    QmlConfig c;
    c.anneal.max_iterations = iterations;
    return c;
}

}  // namespace

TEST(Qml, feature_map_layout) {
    auto c = feature_map_circuit(with_first(0.5));
    ASSERT_EQ(c.ops().size(), static_cast<size_t>(kClassifierFeatures));
    EXPECT_EQ(c.ops()[0].kind, GateKind::RY);
    EXPECT_EQ(c.ops()[1].kind, GateKind::RX);
    EXPECT_EQ(c.ops()[2].kind, GateKind::RZ);
    EXPECT_EQ(c.ops()[3].qubits[0], 1);
    std::vector<double> short_features(4, 0.0);
    ASSERT_THROW(feature_map_circuit(short_features), ShapeError);
    ASSERT_THROW(feature_map_circuit(with_first(std::nan(""))), ShapeError);
}

TEST(Qml, expectation_examples) {
    ClassifierSpec spec;
    std::vector<double> zeros(classifier_param_count(spec), 0.0);
    EXPECT_EQ(classifier_param_count(spec), 9);
    EXPECT_NEAR(classifier_expectation(with_first(0.0), zeros, spec), 1.0, 1e-12);
    // Z on qubit 0 commutes with CNOTs controlled by qubit 0.
    for (double t : {0.3, 1.2, 2.9}) {
        EXPECT_NEAR(classifier_expectation(with_first(t, 0), zeros, spec), std::cos(t), 1e-12);
        EXPECT_NEAR(classifier_expectation(with_first(t, 1), zeros, spec), std::cos(t), 1e-12);
        EXPECT_NEAR(classifier_expectation(with_first(t, 2), zeros, spec), 1.0, 1e-12);
        EXPECT_NEAR(classifier_expectation(with_first(t, 3), zeros, spec), 1.0, 1e-12);
    }
    // A trailing RY on qubit 0 rotates the expectation further.
    std::vector<double> p = zeros;
    p[classifier_param_count(spec) - 3] = 0.5;
    EXPECT_NEAR(classifier_expectation(with_first(0.0), p, spec), std::cos(0.5), 1e-12);
}

TEST(Qml, readout_noise_scales_expectation) {
    ClassifierSpec spec;
    std::vector<double> zeros(classifier_param_count(spec), 0.0);
    NoiseSpec noise{0.0, 0.0, 0.1};
    EXPECT_NEAR(classifier_expectation(with_first(0.0), zeros, spec, noise, 1, 8), 0.8, 1e-12);
    NoiseSpec depol{0.05, 0.05, 0.0};
    const double z = classifier_expectation(with_first(0.0), zeros, spec, depol, 2, 512);
    EXPECT_LT(z, 1.0);
    EXPECT_GT(z, 0.5);
    ASSERT_THROW(classifier_expectation(with_first(0.0), zeros, spec, depol, 2, 0), ContractViolation);
}

TEST(Qml, score_predictions_examples) {
    std::vector<int> labels{1, 1, 0, 0, 1}, pred{1, 0, 0, 1, 1};
    auto m = score_predictions(labels, pred);
    EXPECT_NEAR(m.accuracy, 0.6, 1e-15);
    EXPECT_NEAR(m.precision, 2.0 / 3, 1e-15);
    EXPECT_NEAR(m.recall, 2.0 / 3, 1e-15);
    EXPECT_NEAR(m.f1, 2.0 / 3, 1e-15);
    std::vector<int> zeros(5, 0);
    auto none = score_predictions(labels, zeros);
    EXPECT_EQ(none.precision, 0.0);
    EXPECT_EQ(none.f1, 0.0);
    ASSERT_THROW(score_predictions(labels, std::span(pred).first(2)), ContractViolation);
}

TEST(Qml, flipping_predictions_complements_accuracy) {
    auto rng = test_rng(80);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> labels(1 + rng() % 30), pred(labels.size()), flipped(labels.size());
        for (size_t i = 0; i < labels.size(); ++i) {
            labels[i] = rng() % 2;
            pred[i] = rng() % 2;
            flipped[i] = 1 - pred[i];
        }
        auto a = score_predictions(labels, pred), b = score_predictions(labels, flipped);
        ASSERT_NEAR(a.accuracy + b.accuracy, 1.0, 1e-12);
        ASSERT_GE(a.f1, 0.0);
        ASSERT_LE(a.f1, 1.0);
        ASSERT_LE(a.f1, std::max(a.precision, a.recall) + 1e-12);
        ASSERT_GE(a.f1, std::min(a.precision, a.recall) - 1e-12);
    }
}

TEST(Qml, stratified_folds_balance_classes) {
    auto data = toy_data(23, 81);
    auto folds = stratified_folds(data, 5, 3);
    ASSERT_EQ(folds.size(), data.size());
    for (int f = 0; f < 5; ++f) {
        int ones = 0, zeros = 0;
        for (size_t i = 0; i < data.size(); ++i) {
            if (folds[i] == f) (data[i].label ? ones : zeros)++;
        }
        EXPECT_GE(ones, 4);
        EXPECT_LE(ones, 5);
        EXPECT_GE(zeros, 4);
        EXPECT_LE(zeros, 5);
    }
    EXPECT_EQ(stratified_folds(data, 5, 3), folds);
    EXPECT_NE(stratified_folds(data, 5, 4), folds);
    auto tiny = toy_data(3, 82);
    ASSERT_THROW(stratified_folds(tiny, 5, 0), DegenerateInputError);
    ASSERT_THROW(stratified_folds(data, 1, 0), ContractViolation);
}

TEST(Qml, zero_iteration_training_returns_a_valid_point) {
    auto data = toy_data(5, 83);
    auto r = train(data, {}, quick_config(0));
    EXPECT_EQ(r.params.size(), 9u);
    for (double p : r.params) {
        EXPECT_GE(p, -std::numbers::pi);
        EXPECT_LE(p, std::numbers::pi);
    }
    EXPECT_TRUE(r.cost_trace.empty());
}

TEST(Qml, learns_separable_data) {
    auto data = toy_data(20, 84);
    auto report = cross_validate(data, {}, quick_config(40), 4, 1);
    ASSERT_EQ(report.per_fold.size(), 4u);
    EXPECT_GE(report.mean.accuracy, 0.95);
    EXPECT_EQ(report.mean.fold_index, -1);
    auto again = cross_validate(data, {}, quick_config(40), 4, 1);
    EXPECT_EQ(again.mean.accuracy, report.mean.accuracy);
}

TEST(Qml, training_cost_trace_is_non_increasing) {
    auto data = toy_data(8, 85);
    auto r = train(data, {}, quick_config(20));
    for (size_t i = 1; i < r.cost_trace.size(); ++i) EXPECT_LE(r.cost_trace[i], r.cost_trace[i - 1]);
    EXPECT_EQ(r.cost, *std::min_element(r.cost_trace.begin(), r.cost_trace.end()));
}

TEST(Qml, training_rejects_bad_datasets) {
    auto data = toy_data(4, 86);
    std::vector<LabeledSample> one_class(data.begin(), data.begin() + 4);
    ASSERT_THROW(train(one_class, {}, quick_config(1)), DegenerateInputError);
    auto bad = data;
    bad[0].label = 2;
    ASSERT_THROW(train(bad, {}, quick_config(1)), ContractViolation);
    bad = data;
    bad[0].features.pop_back();
    ASSERT_THROW(train(bad, {}, quick_config(1)), ShapeError);
}

TEST(LogisticBaseline, separable_and_random_labels) {
    auto data = toy_data(100, 87);
    EXPECT_GE(logistic_baseline(data, 5, 2).mean.accuracy, 0.95);
    auto rng = test_rng(88);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<LabeledSample> noise;
    for (int i = 0; i < 400; ++i) {
        std::vector<double> f(kClassifierFeatures);
        for (auto& x : f) x = u(rng);
        noise.push_back({f, i % 2});
    }
    const double acc = logistic_baseline(noise, 5, 2).mean.accuracy;
    EXPECT_GE(acc, 0.4);
    EXPECT_LE(acc, 0.6);
}

TEST(BlockedSamples, consecutive_blocks_become_samples) {
    std::vector<double> low(2 * kClassifierFeatures), high(2 * kClassifierFeatures);
    std::iota(low.begin(), low.end(), 0.0);
    std::iota(high.begin(), high.end(), 100.0);
    auto s = blocked_samples(low, high, 2);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[1].features[0], 9.0);
    EXPECT_EQ(s[1].label, 0);
    EXPECT_EQ(s[2].features[8], 108.0);
    EXPECT_EQ(s[2].label, 1);
    ASSERT_THROW(blocked_samples(low, high, 3), DegenerateInputError);
    ASSERT_THROW(blocked_samples(low, high, 0), ContractViolation);
}
