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

#include <numeric>

#include "gtest/gtest.h"

#include "cegen/error.h"
#include "cegen/target.h"
#include "test_util.h"

using namespace cegen;
using namespace cegen::testing;

namespace {

CEHistogram random_histogram(const std::vector<double>& edges, Rng& rng) {
    std::exponential_distribution<double> e;
    CEHistogram h;
    h.bin_edges = edges;
    h.masses.resize(edges.size() - 1);
    double total = 0.0;
    for (auto& m : h.masses) total += m = (rng() % 3 == 0) ? 0.0 : e(rng);
    if (total == 0.0) h.masses[0] = total = 1.0;
    for (auto& m : h.masses) m /= total;
    return h;
}

// Composite Simpson integral of `f` over [a, b].
template <typename F>
double simpson(F f, double a, double b, int panels = 2000) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
    return s * h / 3;
}

template <typename Pdf>
std::vector<double> integrated_masses(Pdf pdf, const std::vector<double>& edges) {
    std::vector<double> m;
    for (size_t i = 0; i + 1 < edges.size(); ++i) m.push_back(simpson(pdf, edges[i], edges[i + 1]));
    const double total = std::accumulate(m.begin(), m.end(), 0.0);
    for (auto& v : m) v /= total;
    return m;
}

}  // namespace

TEST(Histogram, uniform_edges) {
    auto e = uniform_edges(0.0, 0.4, 20);
    ASSERT_EQ(e.size(), 21u);
    EXPECT_DOUBLE_EQ(e.front(), 0.0);
    EXPECT_DOUBLE_EQ(e.back(), 0.4);
    EXPECT_NEAR(e[10], 0.2, 1e-15);
}

TEST(Histogram, midpoint_values_fill_one_bin) {
    auto e = uniform_edges(0.0, 0.4, 20);
    std::vector<double> v(17, 0.11);
    auto h = histogram(v, e);
    EXPECT_EQ(h.masses[5], 1.0);
    EXPECT_EQ(h.sample_count, 17);
}

TEST(Histogram, uniform_grid_gives_equal_masses) {
    auto e = uniform_edges(0.0, 0.4, 20);
    std::vector<double> v;
    const int n = 4000;
    for (int i = 0; i < n; ++i) v.push_back(0.4 * (i + 0.5) / n);
    auto h = histogram(v, e);
    for (double m : h.masses) EXPECT_NEAR(m, 0.05, 1.0 / n);
}

TEST(Histogram, interior_edge_goes_right_and_last_edge_is_closed) {
    std::vector<double> e{0.0, 1.0, 2.0};
    std::vector<double> on_edge{1.0};
    EXPECT_EQ(histogram(on_edge, e).masses[1], 1.0);
    std::vector<double> top{2.0};
    auto h = histogram(top, e);
    EXPECT_EQ(h.masses[1], 1.0);
    EXPECT_EQ(h.clamped, 0);
}

TEST(Histogram, out_of_range_values_are_clamped_and_counted) {
    std::vector<double> e{0.0, 1.0, 2.0};
    std::vector<double> v{-0.5, 3.0, 0.5, 1.5};
    auto h = histogram(v, e);
    EXPECT_EQ(h.clamped, 2);
    EXPECT_EQ(h.masses[0], 0.5);
    EXPECT_EQ(h.masses[1], 0.5);
}

TEST(Histogram, errors) {
    std::vector<double> e{0.0, 1.0}, bad_edges{1.0, 0.0}, one_edge{0.0};
    std::vector<double> none, nan_value{std::nan("")}, ok{0.5};
    ASSERT_THROW(histogram(none, e), DegenerateInputError);
    ASSERT_THROW(histogram(nan_value, e), DegenerateInputError);
    ASSERT_THROW(histogram(ok, bad_edges), ContractViolation);
    ASSERT_THROW(histogram(ok, one_edge), ContractViolation);
}

TEST(Histogram, normalization_property) {
    auto rng = test_rng(50);
    std::uniform_real_distribution<double> u(-0.1, 0.5);
    auto e = uniform_edges(0.0, 0.4, 20);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<double> v(1 + rng() % 50);
        for (auto& x : v) x = u(rng);
        auto h = histogram(v, e);
        ASSERT_EQ(h.masses.size(), e.size() - 1);
        double total = 0.0;
        for (double m : h.masses) {
            ASSERT_GE(m, 0.0);
            total += m;
        }
        ASSERT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(TVD, examples) {
    std::vector<double> e{0.0, 1.0, 2.0};
    CEHistogram p{e, {1.0, 0.0}}, q{e, {0.0, 1.0}}, half{e, {0.5, 0.5}};
    EXPECT_EQ(tvd(p, p), 0.0);
    EXPECT_EQ(tvd(p, q), 1.0);
    EXPECT_EQ(tvd(half, p), 0.5);
    CEHistogram other{{0.0, 1.0, 3.0}, {1.0, 0.0}};
    ASSERT_THROW(tvd(p, other), ContractViolation);
}

TEST(TVD, metric_axioms) {
    auto rng = test_rng(51);
    auto e = uniform_edges(0.0, 0.4, 20);
    for (int trial = 0; trial < 10000; ++trial) {
        auto p = random_histogram(e, rng), q = random_histogram(e, rng), r = random_histogram(e, rng);
        const double pq = tvd(p, q);
        ASSERT_EQ(tvd(p, p), 0.0);
        ASSERT_NEAR(pq, tvd(q, p), 1e-15);
        ASSERT_GE(pq, 0.0);
        ASSERT_LE(pq, 1.0 + 1e-12);
        ASSERT_LE(pq, tvd(p, r) + tvd(r, q) + 1e-12);
    }
}

TEST(Target, gaussian_matches_quadrature) {
    auto t = make_target(TargetKind::Gaussian);
    const double mu = 0.2, s = 0.05;
    auto oracle = integrated_masses(
        [&](double x) { return std::exp(-0.5 * (x - mu) * (x - mu) / (s * s)); }, t.bin_edges());
    for (size_t i = 0; i < oracle.size(); ++i) EXPECT_NEAR(t.masses()[i], oracle[i], 1e-9);
}

TEST(Target, weibull_left_matches_quadrature) {
    auto t = make_target(TargetKind::WeibullLeft);
    const double k = 1.2, lam = 0.05;
    auto pdf = [&](double x) { return x <= 0 ? 0.0 : k / lam * std::pow(x / lam, k - 1) * std::exp(-std::pow(x / lam, k)); };
    // The density has an integrable x^0.2 cusp at 0; the first bin is checked by CDF.
    const auto& e = t.bin_edges();
    const double first = 1 - std::exp(-std::pow(e[1] / lam, k));
    const double total = 1 - std::exp(-std::pow(e.back() / lam, k));
    EXPECT_NEAR(t.masses()[0], first / total, 1e-12);
    for (size_t i = 1; i + 1 < e.size(); ++i) EXPECT_NEAR(t.masses()[i], simpson(pdf, e[i], e[i + 1]) / total, 1e-9);
}

TEST(Target, weibull_right_is_reflection) {
    auto left = make_target(TargetKind::WeibullLeft);
    auto right = make_target(TargetKind::WeibullRight);
    for (size_t i = 0; i < left.masses().size(); ++i) {
        EXPECT_DOUBLE_EQ(right.masses()[i], left.masses()[left.masses().size() - 1 - i]);
    }
    // Asymmetric support takes the general path.
    auto r2 = make_target(TargetKind::WeibullRight, {}, 0.3, 15);
    EXPECT_GT(r2.masses().back(), r2.masses().front());
}

TEST(Target, uniform_and_normalized) {
    auto u = make_target(TargetKind::Uniform);
    for (double m : u.masses()) EXPECT_NEAR(m, 0.05, 1e-12);
    for (auto k : {TargetKind::Uniform, TargetKind::Gaussian, TargetKind::WeibullLeft, TargetKind::WeibullRight}) {
        auto t = make_target(k);
        EXPECT_NEAR(std::accumulate(t.masses().begin(), t.masses().end(), 0.0), 1.0, 1e-12);
        EXPECT_EQ(parse_target(target_name(k)), k);
    }
}

TEST(Target, errors) {
    ASSERT_THROW(make_target(TargetKind::Gaussian, {0.2, -1.0}), ContractViolation);
    ASSERT_THROW(make_target(TargetKind::Empirical), ContractViolation);
    ASSERT_THROW(parse_target("normal"), ConfigError);
}

TEST(Target, empirical_bins_data) {
    std::vector<double> v{0.01, 0.01, 0.39};
    auto t = empirical_target(v);
    EXPECT_NEAR(t.masses()[0], 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(t.masses()[19], 1.0 / 3.0, 1e-15);
}
