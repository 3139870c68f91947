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

#include "cegen/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& text) {
    const std::string t = trim(text);
    T v{};
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || end != t.data() + t.size()) {
        throw ConfigError(fmt::format("'{}' is not a valid number", text));
    }
    return v;
}

bool parse_bool(const std::string& text) {
    std::string t = trim(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "on" || t == "yes" || t == "1") return true;
    if (t == "false" || t == "off" || t == "no" || t == "0") return false;
    throw ConfigError(fmt::format("'{}' is not a boolean (true/false/on/off)", text));
}

std::vector<std::string> parse_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F name) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        out += (i ? "," : "") + std::string(name(items[i]));
    }
    return out;
}

std::string show(double v) { return fmt::format("{}", v); }
std::string show(bool v) { return v ? "true" : "false"; }

template <typename T>
std::string show(T v)
    requires std::is_integral_v<T>
{
    return std::to_string(v);
}

template <typename T>
void assign(T& slot, const std::string& text) {
    if constexpr (std::is_same_v<T, bool>) {
        slot = parse_bool(text);
    } else if constexpr (std::is_same_v<T, std::string>) {
        slot = trim(text);
    } else {
        slot = parse_number<T>(text);
    }
}

template <typename T>
std::string display(const T& v) {
    if constexpr (std::is_same_v<T, std::string>) {
        return v;
    } else {
        return show(v);
    }
}

template <typename Access>
ConfigField field(std::string section, std::string key, std::string doc, Access access) {
    return {std::move(section), std::move(key), std::move(doc),
            [access](RunConfig& c, const std::string& text) { assign(access(c), text); },
            [access](const RunConfig& c) { return display(access(const_cast<RunConfig&>(c))); }};
}

std::vector<ConfigField> build_schema() {
    std::vector<ConfigField> s;
    s.push_back(field("run", "seed", "root seed of every random stream", [](RunConfig& c) -> auto& { return c.seed; }));

    s.push_back({"ansatz", "family", "A1, A2, A3 or A4",
                 [](RunConfig& c, const std::string& t) { c.ansatz.family = parse_family(trim(t)); },
                 [](const RunConfig& c) { return std::string(family_name(c.ansatz.family)); }});
    s.push_back(field("ansatz", "num_qubits", "register size",
                      [](RunConfig& c) -> auto& { return c.ansatz.num_qubits; }));
    s.push_back(field("ansatz", "layers", "layer repetitions", [](RunConfig& c) -> auto& { return c.ansatz.layers; }));

    s.push_back({"target", "kind", "uniform, gaussian, weibull_left or weibull_right",
                 [](RunConfig& c, const std::string& t) { c.target = parse_target(trim(t)); },
                 [](const RunConfig& c) { return std::string(target_name(c.target)); }});
    s.push_back(field("target", "mu", "gaussian mean", [](RunConfig& c) -> auto& { return c.target_params.mu; }));
    s.push_back(field("target", "sigma", "gaussian standard deviation",
                      [](RunConfig& c) -> auto& { return c.target_params.sigma; }));
    s.push_back(field("target", "shape", "weibull shape k", [](RunConfig& c) -> auto& { return c.target_params.shape; }));
    s.push_back(field("target", "scale", "weibull scale lambda",
                      [](RunConfig& c) -> auto& { return c.target_params.scale; }));
    s.push_back(field("target", "reflect_point", "mirror point of weibull_right",
                      [](RunConfig& c) -> auto& { return c.target_params.reflect_point; }));
    s.push_back(field("target", "ce_max", "upper edge of the CE histogram", [](RunConfig& c) -> auto& { return c.ce_max; }));
    s.push_back(field("target", "bins", "histogram bin count", [](RunConfig& c) -> auto& { return c.bins; }));

    s.push_back(field("anneal", "max_iterations", "annealing iterations",
                      [](RunConfig& c) -> auto& { return c.generator.anneal.max_iterations; }));
    s.push_back(field("anneal", "initial_temperature", "starting temperature",
                      [](RunConfig& c) -> auto& { return c.generator.anneal.initial_temperature; }));
    s.push_back(field("anneal", "visiting_shape", "q_v, in (1, 3)",
                      [](RunConfig& c) -> auto& { return c.generator.anneal.visiting_shape; }));
    s.push_back(field("anneal", "acceptance_shape", "q_a, below 1",
                      [](RunConfig& c) -> auto& { return c.generator.anneal.acceptance_shape; }));
    s.push_back(field("anneal", "restart_temperature_ratio", "restart below this fraction of the start temperature",
                      [](RunConfig& c) -> auto& { return c.generator.anneal.restart_temperature_ratio; }));
    s.push_back(field("anneal", "local_search", "final coordinate refinement",
                      [](RunConfig& c) -> auto& { return c.generator.anneal.local_search; }));
    s.push_back(field("anneal", "local_search_budget", "refinement evaluations, 0 = 60 per parameter",
                      [](RunConfig& c) -> auto& { return c.generator.anneal.local_search_budget; }));

    s.push_back(field("generator", "angle_bound", "parameters live in [-angle_bound, angle_bound]",
                      [](RunConfig& c) -> auto& { return c.generator.angle_bound; }));
    s.push_back(field("generator", "samples_per_eval", "input states per objective evaluation",
                      [](RunConfig& c) -> auto& { return c.generator.samples_per_eval; }));
    s.push_back(field("generator", "heldout_samples", "input states for the final TVD",
                      [](RunConfig& c) -> auto& { return c.generator.heldout_samples; }));
    s.push_back(field("generator", "refine_samples", "fixed batch for the last refinement, 0 = off",
                      [](RunConfig& c) -> auto& { return c.generator.refine_samples; }));
    s.push_back(field("generator", "refine_candidates", "annealing points re-scored before refinement",
                      [](RunConfig& c) -> auto& { return c.generator.refine_candidates; }));
    s.push_back({"generator", "ce_method", "full, ce_k, nzp or ce1",
                 [](RunConfig& c, const std::string& t) { c.generator.ce.method = parse_method(trim(t)); },
                 [](const RunConfig& c) { return std::string(method_name(c.generator.ce.method)); }});
    s.push_back(field("generator", "ce_k", "subsystem size for ce_k", [](RunConfig& c) -> auto& { return c.generator.ce.k; }));
    s.push_back(field("generator", "diversity_weight", "weight of the collapse penalty",
                      [](RunConfig& c) -> auto& { return c.generator.diversity_weight; }));
    s.push_back(field("generator", "diversity_threshold", "mean SWAP p0 above which the penalty starts",
                      [](RunConfig& c) -> auto& { return c.generator.diversity_threshold; }));
    s.push_back(field("generator", "penalty_pairs", "SWAP pairs per evaluation, 0 = no penalty",
                      [](RunConfig& c) -> auto& { return c.generator.penalty_pairs; }));
    s.push_back(field("generator", "true_haar", "cos(theta) uniform instead of theta uniform",
                      [](RunConfig& c) -> auto& { return c.generator.true_haar; }));
    s.push_back(field("generator", "dataset_size", "states in the emitted dataset",
                      [](RunConfig& c) -> auto& { return c.dataset_size; }));
    s.push_back(field("generator", "dataset_shots", "shots per CE estimate of the dataset, 0 = exact",
                      [](RunConfig& c) -> auto& { return c.dataset_shots; }));

    s.push_back(field("noise", "enabled", "noisy simulation", [](RunConfig& c) -> auto& { return c.noise_enabled; }));
    s.push_back(field("noise", "p1", "one-qubit gate error", [](RunConfig& c) -> auto& { return c.noise.p1; }));
    s.push_back(field("noise", "p2", "multi-qubit gate error", [](RunConfig& c) -> auto& { return c.noise.p2; }));
    s.push_back(field("noise", "p_readout", "readout flip probability",
                      [](RunConfig& c) -> auto& { return c.noise.p_readout; }));

    s.push_back(field("diversity", "pairs_per_bin", "SWAP pairs per CE bin",
                      [](RunConfig& c) -> auto& { return c.pairs_per_bin; }));
    s.push_back(field("diversity", "shots", "shots per SWAP test, 0 = exact", [](RunConfig& c) -> auto& { return c.swap_shots; }));
    s.push_back(field("diversity", "threshold", "collapse threshold on mean p0",
                      [](RunConfig& c) -> auto& { return c.swap_threshold; }));

    s.push_back({"sensors", "protocols", "comma list of soil, dark_matter",
                 [](RunConfig& c, const std::string& t) {
                     c.protocols = parse_list(t);
                     for (const auto& p : c.protocols) {
                         if (p != "soil" && p != "dark_matter") {
                             throw ConfigError(fmt::format("unknown protocol '{}' (expected soil or dark_matter)", p));
                         }
                     }
                 },
                 [](const RunConfig& c) { return join(c.protocols, [](const std::string& p) { return p; }); }});

    s.push_back(field("soil", "num_sensor_qubits", "even sensor count",
                      [](RunConfig& c) -> auto& { return c.soil.num_sensor_qubits; }));
    s.push_back(field("soil", "phi_high", "soil-group phase, high moisture",
                      [](RunConfig& c) -> auto& { return c.phi_soil_high; }));
    s.push_back(field("soil", "phi_low", "soil-group phase, low moisture",
                      [](RunConfig& c) -> auto& { return c.phi_soil_low; }));
    s.push_back(field("soil", "phi_free", "reference-group phase", [](RunConfig& c) -> auto& { return c.soil.phi_free; }));
    s.push_back(field("soil", "jitter_sigma", "per-member phase jitter",
                      [](RunConfig& c) -> auto& { return c.soil.jitter_sigma; }));
    s.push_back(field("soil", "shots_per_state", "SWAP shots per qubit, 0 = exact",
                      [](RunConfig& c) -> auto& { return c.soil.shots_per_state; }));
    s.push_back(field("soil", "ensemble_size", "members per regime",
                      [](RunConfig& c) -> auto& { return c.soil.ensemble_size; }));

    s.push_back(field("dark_matter", "num_sensor_qubits", "sensor count",
                      [](RunConfig& c) -> auto& { return c.dark_matter.num_sensor_qubits; }));
    s.push_back(field("dark_matter", "phi_weak", "weak-signal rotation", [](RunConfig& c) -> auto& { return c.phi_weak; }));
    s.push_back(field("dark_matter", "phi_strong", "strong-signal rotation",
                      [](RunConfig& c) -> auto& { return c.phi_strong; }));
    s.push_back(field("dark_matter", "jitter_sigma", "per-member rotation jitter",
                      [](RunConfig& c) -> auto& { return c.dark_matter.jitter_sigma; }));
    s.push_back(field("dark_matter", "shots_per_state", "SWAP shots per qubit, 0 = exact",
                      [](RunConfig& c) -> auto& { return c.dark_matter.shots_per_state; }));
    s.push_back(field("dark_matter", "ensemble_size", "members per regime",
                      [](RunConfig& c) -> auto& { return c.dark_matter.ensemble_size; }));

    s.push_back(field("classify", "low", "dataset file of the label-0 class",
                      [](RunConfig& c) -> auto& { return c.classify_low; }));
    s.push_back(field("classify", "high", "dataset file of the label-1 class",
                      [](RunConfig& c) -> auto& { return c.classify_high; }));
    s.push_back(field("classify", "per_class", "samples of 9 CE values per class",
                      [](RunConfig& c) -> auto& { return c.per_class; }));
    s.push_back(field("classify", "folds", "cross-validation folds", [](RunConfig& c) -> auto& { return c.folds; }));
    s.push_back(field("classify", "noisy", "also cross-validate under the noise model",
                      [](RunConfig& c) -> auto& { return c.classify_noisy; }));
    s.push_back(field("classify", "ansatz_reps", "variational repetitions",
                      [](RunConfig& c) -> auto& { return c.classifier.ansatz_reps; }));
    s.push_back(field("classify", "decision_threshold", "predict 1 when <Z0> is below this",
                      [](RunConfig& c) -> auto& { return c.classifier.decision_threshold; }));
    s.push_back(field("classify", "max_iterations", "annealing iterations per fold",
                      [](RunConfig& c) -> auto& { return c.qml.anneal.max_iterations; }));
    s.push_back(field("classify", "train_trajectories", "noise trajectories per training expectation",
                      [](RunConfig& c) -> auto& { return c.qml.train_trajectories; }));
    s.push_back(field("classify", "eval_trajectories", "noise trajectories per scored expectation",
                      [](RunConfig& c) -> auto& { return c.qml.eval_trajectories; }));

    s.push_back({"compare", "families", "comma list of ansatz families",
                 [](RunConfig& c, const std::string& t) {
                     c.compare_families.clear();
                     for (const auto& f : parse_list(t)) {
                         c.compare_families.push_back(parse_family(f));
                     }
                 },
                 [](const RunConfig& c) { return join(c.compare_families, family_name); }});
    s.push_back({"compare", "targets", "comma list of target kinds",
                 [](RunConfig& c, const std::string& t) {
                     c.compare_targets.clear();
                     for (const auto& f : parse_list(t)) {
                         c.compare_targets.push_back(parse_target(f));
                     }
                 },
                 [](const RunConfig& c) { return join(c.compare_targets, target_name); }});
    s.push_back(field("compare", "max_iterations", "annealing iterations per family and target",
                      [](RunConfig& c) -> auto& { return c.compare_iterations; }));

    s.push_back(field("ce", "input", "dataset file for the ce and swap commands",
                      [](RunConfig& c) -> auto& { return c.input; }));
    s.push_back({"ce", "method", "full, ce_k, nzp or ce1",
                 [](RunConfig& c, const std::string& t) { c.ce_method = parse_method(trim(t)); },
                 [](const RunConfig& c) { return std::string(method_name(c.ce_method)); }});
    s.push_back(field("ce", "k", "subsystem size for ce_k", [](RunConfig& c) -> auto& { return c.ce_k; }));
    s.push_back(field("ce", "shots", "shots per estimate, 0 = exact", [](RunConfig& c) -> auto& { return c.ce_shots; }));
    return s;
}

}  // namespace

RunConfig::RunConfig() = default;

const std::vector<ConfigField>& config_schema() {
    static const std::vector<ConfigField> schema = build_schema();
    return schema;
}

RunConfig parse_config(std::istream& in, const std::string& source) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(fmt::format("{}:{}: {}", source, e.line(), e.message()));
    }
    const auto& schema = config_schema();
    std::set<std::string> sections;
    for (const auto& f : schema) {
        sections.insert(f.section);
    }
    RunConfig config;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty()) {
            throw ConfigError(fmt::format("{}: key '{}' must sit inside a [section]", source, section));
        }
        if (!sections.count(section)) {
            throw ConfigError(fmt::format("{}: unknown section [{}]", source, section));
        }
        for (const auto& [key, value] : body) {
            auto it = std::find_if(schema.begin(), schema.end(),
                                   [&](const ConfigField& f) { return f.section == section && f.key == key; });
            if (it == schema.end()) {
                throw ConfigError(fmt::format("{}: unknown key '{}.{}'", source, section, key));
            }
            try {
                it->set(config, value.data());
            } catch (const Error& e) {
                throw ConfigError(fmt::format("{}: {}.{}: {}", source, section, key, e.what()));
            }
        }
    }
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
    }
    return parse_config(in, path.string());
}

std::string emit_config(const RunConfig& config) {
    std::string out;
    std::string section;
    for (const auto& f : config_schema()) {
        if (f.section != section) {
            out += fmt::format("{}[{}]\n", section.empty() ? "" : "\n", f.section);
            section = f.section;
        }
        out += fmt::format("{} = {}\n", f.key, f.get(config));
    }
    return out;
}

}  // namespace cegen
