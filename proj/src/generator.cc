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

#include "cegen/generator.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "cegen/error.h"
#include "cegen/rng.h"

namespace cegen {

std::vector<StateVector> sample_haar_product(int num_qubits, int count, uint64_t seed, bool true_haar) {
    if (num_qubits < 1 || count < 1) {
        throw ContractViolation(fmt::format("need num_qubits >= 1 and count >= 1 (got {}, {})", num_qubits, count));
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double pi = std::numbers::pi;
    std::vector<StateVector> out;
    out.reserve(count);
    std::vector<std::array<Complex, 2>> qubits(num_qubits);
    for (int s = 0; s < count; ++s) {
        for (auto& q : qubits) {
            const double theta = true_haar ? std::acos(1.0 - 2.0 * unit(rng)) : pi * unit(rng);
            const double phi = 2.0 * pi * unit(rng);
            q = {Complex{std::cos(theta / 2), 0.0}, std::polar(std::sin(theta / 2), phi)};
        }
        out.push_back(StateVector::product(qubits));
    }
    return out;
}

void GeneratorConfig::validate() const {
    if (samples_per_eval < 10) {
        throw ContractViolation(fmt::format("samples_per_eval must be >= 10, got {}", samples_per_eval));
    }
    if (heldout_samples < 1) {
        throw ContractViolation("heldout_samples must be >= 1");
    }
    if (!(diversity_weight >= 0.0)) {
        throw ContractViolation("diversity_weight must be >= 0");
    }
    if (!(angle_bound > 0.0)) {
        throw ContractViolation("angle_bound must be positive");
    }
    if (penalty_pairs < 0) {
        throw ContractViolation("penalty_pairs must be >= 0");
    }
    if (refine_candidates < 0) {
        throw ContractViolation("refine_candidates must be >= 0");
    }
    if (refine_samples != 0 && refine_samples < 10) {
        throw ContractViolation(fmt::format("refine_samples must be 0 or >= 10, got {}", refine_samples));
    }
}

ObjectiveBreakdown evaluate_objective(std::span<const double> params, const RunSpec& spec, const Circuit& circuit,
                                      std::span<const StateVector> inputs, uint64_t seed) {
    const long count = static_cast<long>(inputs.size());
    std::vector<StateVector> outputs(inputs.begin(), inputs.end());
    ObjectiveBreakdown b;
    b.ce_values.resize(count);
    const uint64_t ce_seed = derive_seed(seed, "ce");
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        outputs[i] = apply_circuit(inputs[i], circuit, params);
        b.ce_values[i] = estimate_ce(outputs[i], spec.config.ce, derive_seed(ce_seed, i)).value;
    }
    // Reduction in index order keeps the result independent of scheduling.
    b.generated = histogram(b.ce_values, spec.target.bin_edges());
    b.tvd = tvd(b.generated, spec.target.histogram);

    const size_t pairs = std::min<size_t>(spec.config.penalty_pairs, outputs.size() / 2);
    if (pairs > 0) {
        std::vector<size_t> order(outputs.size());
        std::iota(order.begin(), order.end(), size_t{0});
        Rng rng(derive_seed(seed, "pairs"));
        std::shuffle(order.begin(), order.end(), rng);
        double sum = 0.0;
        for (size_t p = 0; p < pairs; ++p) {
            sum += swap_test(outputs[order[2 * p]], outputs[order[2 * p + 1]], 0, 0);
        }
        SwapReport report;
        report.threshold = spec.config.diversity_threshold;
        report.total_pairs = static_cast<int>(pairs);
        report.overall_mean_p0 = sum / pairs;
        report.collapsed = report.overall_mean_p0 > report.threshold;
        b.mean_p0 = report.overall_mean_p0;
        b.penalty = diversity_penalty(report, spec.config.diversity_weight);
    }
    b.total = b.tvd + b.penalty;
    return b;
}

uint64_t objective_batch_seed(const GeneratorConfig& config, uint64_t batch) {
    return derive_seed(derive_seed(config.seed, "objective"), batch);
}

double objective(std::span<const double> params, const RunSpec& spec, uint64_t batch) {
    const Circuit circuit = build_ansatz(spec.ansatz);
    const uint64_t seed = objective_batch_seed(spec.config, batch);
    auto inputs = sample_haar_product(spec.ansatz.num_qubits, spec.config.samples_per_eval, seed, spec.config.true_haar);
    return evaluate_objective(params, spec, circuit, inputs, seed).total;
}

double heldout_tvd(const RunSpec& spec, std::span<const double> params, int samples, uint64_t seed) {
    const Circuit circuit = build_ansatz(spec.ansatz);
    auto inputs = sample_haar_product(spec.ansatz.num_qubits, samples, seed, spec.config.true_haar);
    RunSpec no_penalty = spec;
    no_penalty.config.penalty_pairs = 0;
    return evaluate_objective(params, no_penalty, circuit, inputs, seed).tvd;
}

GenerationRun optimize_generator(const RunSpec& spec) {
    spec.config.validate();
    const Circuit circuit = build_ansatz(spec.ansatz);
    const int dim = circuit.num_symbolic_params();

    AnnealConfig anneal = spec.config.anneal;
    if (anneal.bounds.empty()) {
        anneal.bounds.assign(dim, Interval{-spec.config.angle_bound, spec.config.angle_bound});
    }
    if (static_cast<int>(anneal.bounds.size()) != dim) {
        throw ParameterCountError(fmt::format("{} bounds given for {} ansatz parameters", anneal.bounds.size(), dim));
    }
    anneal.reevaluate_current = true;
    anneal.seed = derive_seed(spec.config.seed, "anneal");

    // One input batch per annealing iteration, shared by every evaluation in it.
    // The lowest-scoring points seen are kept as refinement candidates.
    const size_t keep = static_cast<size_t>(std::max(spec.config.refine_candidates, 1));
    std::vector<std::pair<double, std::vector<double>>> candidates;
    uint64_t cached_batch = ~uint64_t{0};
    std::vector<StateVector> inputs;
    uint64_t batch_seed = 0;
    BatchedObjective f = [&](std::span<const double> x, uint64_t batch) {
        if (batch != cached_batch) {
            batch_seed = objective_batch_seed(spec.config, batch);
            inputs = sample_haar_product(spec.ansatz.num_qubits, spec.config.samples_per_eval, batch_seed,
                                         spec.config.true_haar);
            cached_batch = batch;
        }
        const double v = evaluate_objective(x, spec, circuit, inputs, batch_seed).total;
        if (candidates.size() < keep || v < candidates.back().first) {
            auto at = std::upper_bound(candidates.begin(), candidates.end(), v,
                                       [](double a, const auto& c) { return a < c.first; });
            candidates.insert(at, {v, std::vector<double>(x.begin(), x.end())});
            if (candidates.size() > keep) {
                candidates.pop_back();
            }
        }
        return v;
    };
    AnnealResult result = dual_annealing(f, anneal);

    std::optional<double> refined_cost;
    if (spec.config.refine_samples > 0 && anneal.max_iterations > 0) {
        const uint64_t refine_seed = derive_seed(spec.config.seed, "refine");
        const auto refine_inputs = sample_haar_product(spec.ansatz.num_qubits, spec.config.refine_samples,
                                                       refine_seed, spec.config.true_haar);
        Objective g = [&](std::span<const double> x) {
            return evaluate_objective(x, spec, circuit, refine_inputs, refine_seed).total;
        };
        std::vector<double> start = result.best_x;
        double start_cost = g(start);
        long evaluations = 1;
        for (const auto& [v, x] : candidates) {
            const double c = g(x);
            ++evaluations;
            if (c < start_cost) {
                start = x;
                start_cost = c;
            }
        }
        const int budget = anneal.local_search_budget > 0 ? anneal.local_search_budget : 60 * dim;
        LocalSearchResult refined = compass_search(g, anneal.bounds, std::move(start), budget);
        result.best_x = std::move(refined.x);
        refined_cost = refined.cost;
        result.evaluations += evaluations + refined.evaluations;
    }

    GenerationRun run;
    run.spec = spec;
    run.spec.config.anneal.bounds = anneal.bounds;
    run.best_params = result.best_x;
    run.best_cost = result.best_cost;
    run.refined_cost = refined_cost;
    run.cost_trace = result.cost_trace;
    run.evaluations = result.evaluations;
    run.seed = spec.config.seed;
    const uint64_t heldout_seed = derive_seed(spec.config.seed, "heldout");
    run.final_tvd = heldout_tvd(spec, run.best_params, spec.config.heldout_samples, heldout_seed);
    const std::vector<double> zeros(dim, 0.0);
    run.initial_tvd = heldout_tvd(spec, zeros, spec.config.heldout_samples, heldout_seed);
    return run;
}

std::optional<std::string> Dataset::meta(const std::string& key) const {
    for (const auto& [k, v] : metadata) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

Dataset generate_dataset(const GenerationRun& run, int count, uint64_t seed, int shots,
                         const std::optional<NoiseSpec>& noise) {
    if (count < 1) {
        throw ContractViolation(fmt::format("dataset count must be >= 1, got {}", count));
    }
    if (shots < 0) {
        throw ContractViolation(fmt::format("shots must be >= 0, got {}", shots));
    }
    if (noise) {
        noise->validate();
    }
    const auto& spec = run.spec;
    const Circuit circuit = build_ansatz(spec.ansatz);
    if (static_cast<int>(run.best_params.size()) != circuit.num_symbolic_params()) {
        throw ParameterCountError(fmt::format("run carries {} parameters, ansatz needs {}", run.best_params.size(),
                                              circuit.num_symbolic_params()));
    }
    auto inputs = sample_haar_product(spec.ansatz.num_qubits, count, derive_seed(seed, "inputs"), spec.config.true_haar);
    CEOptions ce = spec.config.ce;
    ce.shots = shots;
    ce.p_readout = noise ? noise->p_readout : 0.0;
    const uint64_t noise_seed = derive_seed(seed, "noise");
    const uint64_t ce_seed = derive_seed(seed, "ce");

    Dataset d;
    d.num_qubits = spec.ansatz.num_qubits;
    d.states = inputs;
    d.ce_values.resize(count);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        d.states[i] = noise ? apply_circuit_noisy(inputs[i], circuit, run.best_params, *noise, derive_seed(noise_seed, i))
                            : apply_circuit(inputs[i], circuit, run.best_params);
        d.ce_values[i] = estimate_ce(d.states[i], ce, derive_seed(ce_seed, i)).value;
    }
    d.metadata = {
        {"kind", "generate"},
        {"num_qubits", std::to_string(d.num_qubits)},
        {"ansatz", std::string(family_name(spec.ansatz.family))},
        {"layers", std::to_string(spec.ansatz.layers)},
        {"target", std::string(target_name(spec.target.kind))},
        {"ce_method", std::string(method_name(ce.method))},
        {"ce_k", std::to_string(ce.k)},
        {"seed", std::to_string(seed)},
        {"count", std::to_string(count)},
        {"shots", std::to_string(shots)},
        {"noise", noise ? fmt::format("p1={:.17g},p2={:.17g},p_readout={:.17g}", noise->p1, noise->p2, noise->p_readout)
                        : std::string("off")},
        {"true_haar", spec.config.true_haar ? "true" : "false"},
    };
    return d;
}

std::vector<double> tied_ranks(std::span<const double> values) {
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j + 1 < order.size() && std::abs(values[order[j + 1]] - values[order[i]]) <= 1e-12) {
            ++j;
        }
        const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (size_t k = i; k <= j; ++k) {
            ranks[order[k]] = shared;
        }
        i = j + 1;
    }
    return ranks;
}

ComparisonTable summarize_comparison(std::span<const AnsatzFamily> families, std::vector<std::string> target_names,
                                     const std::vector<std::vector<double>>& tvd_by_family) {
    if (families.size() < 2) {
        throw ContractViolation("comparison needs at least two ansatz families");
    }
    if (target_names.empty()) {
        throw ContractViolation("comparison needs at least one target");
    }
    if (tvd_by_family.size() != families.size()) {
        throw ContractViolation("one TVD row per family required");
    }
    const size_t m = families.size();
    const size_t t = target_names.size();
    ComparisonTable table;
    table.target_names = std::move(target_names);
    table.rows.resize(m);
    for (size_t f = 0; f < m; ++f) {
        if (tvd_by_family[f].size() != t) {
            throw ContractViolation("one TVD per target required");
        }
        table.rows[f].family = families[f];
        table.rows[f].tvds = tvd_by_family[f];
    }
    for (size_t j = 0; j < t; ++j) {
        std::vector<double> column(m);
        for (size_t f = 0; f < m; ++f) {
            column[f] = tvd_by_family[f][j];
        }
        auto ranks = tied_ranks(column);
        for (size_t f = 0; f < m; ++f) {
            table.rows[f].ranks.push_back(ranks[f]);
        }
    }
    for (auto& row : table.rows) {
        const double n = static_cast<double>(t);
        row.mean_tvd = std::accumulate(row.tvds.begin(), row.tvds.end(), 0.0) / n;
        std::vector<double> sorted = row.tvds;
        std::sort(sorted.begin(), sorted.end());
        row.median_tvd = t % 2 ? sorted[t / 2] : 0.5 * (sorted[t / 2 - 1] + sorted[t / 2]);
        double var = 0.0;
        for (double v : row.tvds) {
            var += (v - row.mean_tvd) * (v - row.mean_tvd);
        }
        row.tvd_variance = var / n;
        row.avg_rank = std::accumulate(row.ranks.begin(), row.ranks.end(), 0.0) / n;
    }
    return table;
}

ComparisonTable compare_ansatzes(std::span<const TargetDistribution> targets, std::span<const AnsatzFamily> families,
                                 const AnsatzSpec& shape, const GeneratorConfig& config) {
    if (families.size() < 2) {
        throw ContractViolation("comparison needs at least two ansatz families");
    }
    if (targets.empty()) {
        throw ContractViolation("comparison needs at least one target");
    }
    std::vector<std::string> names;
    for (const auto& t : targets) {
        names.emplace_back(target_name(t.kind));
    }
    std::vector<std::vector<double>> tvds(families.size());
    for (size_t f = 0; f < families.size(); ++f) {
        for (size_t j = 0; j < targets.size(); ++j) {
            RunSpec spec{shape, targets[j], config};
            spec.ansatz.family = families[f];
            spec.config.anneal.bounds.clear();
            // Families share the per-target seed so they see the same batches.
            spec.config.seed = derive_seed(config.seed, fmt::format("compare/{}/{}", j, names[j]));
            tvds[f].push_back(optimize_generator(spec).final_tvd);
        }
    }
    return summarize_comparison(families, std::move(names), tvds);
}

}  // namespace cegen
