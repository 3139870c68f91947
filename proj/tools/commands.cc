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

#include "commands.h"

#include <cmath>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cegen/error.h"
#include "cegen/io.h"
#include "cegen/rng.h"

namespace cegen::cli {

namespace {

namespace fs = std::filesystem;

// Library contract violations raised while checking a config are config errors.
template <typename F>
void as_config_error(std::string_view what, F check) {
    try {
        check();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(fmt::format("{}: {}", what, e.what()));
    }
}

std::optional<NoiseSpec> active_noise(const RunConfig& c) {
    return c.noise_enabled ? std::optional<NoiseSpec>(c.noise) : std::nullopt;
}

TargetDistribution target_of(const RunConfig& c, TargetKind kind) {
    TargetDistribution t;
    as_config_error("[target]", [&] { t = make_target(kind, c.target_params, c.ce_max, c.bins); });
    return t;
}

void write_config(const RunConfig& c, const fs::path& out) { write_file_atomic(out / "config.ini", emit_config(c)); }

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / v.size();
}

double sd_of(const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return v.size() > 1 ? std::sqrt(s / (v.size() - 1)) : 0.0;
}

}  // namespace

RunConfig resolve_config(const Overrides& o) {
    RunConfig c = o.config ? load_config(*o.config) : RunConfig{};
    if (o.seed) {
        c.seed = *o.seed;
    }
    if (o.shots) {
        if (*o.shots < 0) {
            throw ConfigError(fmt::format("--shots must be >= 0, got {}", *o.shots));
        }
        c.dataset_shots = *o.shots;
        c.swap_shots = *o.shots;
        c.soil.shots_per_state = *o.shots;
        c.dark_matter.shots_per_state = *o.shots;
        c.ce_shots = *o.shots;
    }
    if (o.noise) {
        c.noise_enabled = *o.noise;
        c.classify_noisy = *o.noise;
    }
    return c;
}

void cmd_generate(const RunConfig& c, const fs::path& out, std::ostream& log) {
    RunSpec spec;
    spec.ansatz = c.ansatz;
    spec.target = target_of(c, c.target);
    spec.config = c.generator;
    spec.config.seed = derive_seed(c.seed, "generator");
    as_config_error("[generator]", [&] {
        param_count(spec.ansatz);
        spec.config.validate();
        AnnealConfig schedule = spec.config.anneal;
        schedule.bounds.assign(1, Interval{-1.0, 1.0});
        schedule.validate();
        if (c.noise_enabled) c.noise.validate();
        if (c.dataset_size < 2) throw ContractViolation("dataset_size must be >= 2");
        if (c.dataset_shots < 0) throw ContractViolation("dataset_shots must be >= 0");
        if (c.pairs_per_bin < 1) throw ContractViolation("pairs_per_bin must be >= 1");
    });

    const GenerationRun run = optimize_generator(spec);
    const Dataset ds = generate_dataset(run, c.dataset_size, derive_seed(c.seed, "dataset"), c.dataset_shots,
                                        active_noise(c));
    const CEHistogram generated = histogram(ds.ce_values, spec.target.bin_edges());
    const SwapReport swaps = diversity_scan(ds.states, ds.ce_values, spec.target.bin_edges(), c.pairs_per_bin,
                                            c.swap_shots, derive_seed(c.seed, "swap"), c.swap_threshold);
    const std::string config_text = emit_config(c);
    write_file_atomic(out / "config.ini", config_text);
    write_file_atomic(out / "run.txt", format_run(run, config_text));
    write_dataset(out / "dataset.txt", ds);
    write_file_atomic(out / "histogram.txt", format_histogram(generated, spec.target.histogram));
    write_file_atomic(out / "swap_report.txt", format_swap_report(swaps));
    log << fmt::format("final held-out TVD {:.4f} (untrained {:.4f}); dataset TVD {:.4f}; mean SWAP p0 {:.4f}\n",
                       run.final_tvd, run.initial_tvd, tvd(generated, spec.target.histogram), swaps.overall_mean_p0);
}

void cmd_sensors(const RunConfig& c, const fs::path& out, std::ostream& log) {
    if (c.protocols.empty()) {
        throw ConfigError("[sensors] protocols is empty");
    }
    struct Job {
        std::string file;
        std::function<Dataset()> run;
    };
    std::vector<Job> jobs;
    for (const auto& p : c.protocols) {
        if (p == "soil") {
            for (auto [regime, phi] : {std::pair{"high", c.phi_soil_high}, std::pair{"low", c.phi_soil_low}}) {
                SoilConfig s = c.soil;
                s.phi_soil_mean = phi;
                s.seed = derive_seed(c.seed, fmt::format("soil/{}", regime));
                as_config_error("[soil]", [&] { s.validate(); });
                jobs.push_back({fmt::format("soil_{}.txt", regime), [s, r = std::string(regime)] { return soil_dataset(s, r); }});
            }
        } else {
            for (auto [regime, phi] : {std::pair{"weak", c.phi_weak}, std::pair{"strong", c.phi_strong}}) {
                DarkMatterConfig d = c.dark_matter;
                d.phi = phi;
                d.seed = derive_seed(c.seed, fmt::format("dark_matter/{}", regime));
                as_config_error("[dark_matter]", [&] { d.validate(); });
                jobs.push_back(
                    {fmt::format("dm_{}.txt", regime), [d, r = std::string(regime)] { return dark_matter_dataset(d, r); }});
            }
        }
    }
    write_config(c, out);
    for (const auto& job : jobs) {
        const Dataset ds = job.run();
        write_dataset(out / job.file, ds);
        log << fmt::format("{}: {} states, mean CE {:.6f}, sd {:.6f}\n", job.file, ds.size(), mean_of(ds.ce_values),
                           sd_of(ds.ce_values));
    }
}

void cmd_classify(const RunConfig& c, const fs::path& out, std::ostream& log) {
    if (c.classify_low.empty() || c.classify_high.empty()) {
        throw ConfigError("classify needs dataset files in [classify] low and high");
    }
    if (c.folds < 2 || c.folds > 2 * c.per_class) {
        throw ConfigError(fmt::format("[classify] folds must be in [2, {}], got {}", 2 * c.per_class, c.folds));
    }
    const Dataset low = read_dataset(c.classify_low);
    const Dataset high = read_dataset(c.classify_high);
    std::vector<LabeledSample> samples;
    as_config_error("[classify]", [&] { samples = blocked_samples(low.ce_values, high.ce_values, c.per_class); });

    const uint64_t fold_seed = derive_seed(c.seed, "folds");
    const CVReport baseline = logistic_baseline(samples, c.folds, fold_seed);
    std::vector<ClassifyModeReport> modes{{"baseline", baseline}};
    QmlConfig q = c.qml;
    q.seed = derive_seed(c.seed, "qml");
    q.noise.reset();
    modes.push_back({"ideal", cross_validate(samples, c.classifier, q, c.folds, fold_seed)});
    if (c.classify_noisy) {
        q.noise = c.noise;
        modes.push_back({"noisy", cross_validate(samples, c.classifier, q, c.folds, fold_seed)});
    }
    write_config(c, out);
    write_file_atomic(out / "classify_report.txt", format_cv_table(modes, baseline.mean.accuracy));
    for (const auto& m : modes) {
        log << fmt::format("{}: accuracy {:.4f}, f1 {:.4f}, relative {:.4f}\n", m.mode, m.report.mean.accuracy,
                           m.report.mean.f1, m.report.mean.accuracy / baseline.mean.accuracy);
    }
}

void cmd_compare(const RunConfig& c, const fs::path& out, std::ostream& log) {
    if (c.compare_families.size() < 2) {
        throw ConfigError("[compare] families needs at least two entries");
    }
    if (c.compare_targets.empty()) {
        throw ConfigError("[compare] targets is empty");
    }
    std::vector<TargetDistribution> targets;
    for (auto kind : c.compare_targets) {
        targets.push_back(target_of(c, kind));
    }
    GeneratorConfig g = c.generator;
    g.anneal.max_iterations = c.compare_iterations;
    g.seed = derive_seed(c.seed, "compare");
    as_config_error("[compare]", [&] {
        g.validate();
        param_count(c.ansatz);
        if (c.compare_iterations < 0) throw ContractViolation("max_iterations must be >= 0");
    });
    const ComparisonTable table = compare_ansatzes(targets, c.compare_families, c.ansatz, g);
    write_config(c, out);
    const std::string text = format_comparison(table);
    write_file_atomic(out / "comparison.txt", text);
    log << text;
}

void cmd_ce(const RunConfig& c, const fs::path& out, std::ostream& log) {
    if (c.input.empty()) {
        throw ConfigError("ce needs a dataset file in [ce] input");
    }
    const Dataset ds = read_dataset(c.input);
    CEOptions opt{c.ce_method, c.ce_k, c.ce_shots, c.noise_enabled ? c.noise.p_readout : 0.0};
    const uint64_t seed = derive_seed(c.seed, "ce");
    std::string table = "# sample_id stored recomputed\n";
    std::vector<double> values;
    double max_diff = 0.0;
    for (size_t i = 0; i < ds.size(); ++i) {
        const double v = estimate_ce(ds.states[i], opt, derive_seed(seed, i)).value;
        values.push_back(v);
        max_diff = std::max(max_diff, std::abs(v - ds.ce_values[i]));
        table += fmt::format("{} {:.17g} {:.17g}\n", i, ds.ce_values[i], v);
    }
    write_config(c, out);
    write_file_atomic(out / "ce.txt", table);
    log << fmt::format("{} states, mean {} {:.6f}, max |recomputed - stored| {:.3g}\n", ds.size(),
                       method_name(c.ce_method), mean_of(values), max_diff);
}

void cmd_swap(const RunConfig& c, const fs::path& out, std::ostream& log) {
    if (c.input.empty()) {
        throw ConfigError("swap needs a dataset file in [ce] input");
    }
    const Dataset ds = read_dataset(c.input);
    std::vector<double> edges;
    as_config_error("[target]", [&] { edges = uniform_edges(0.0, c.ce_max, c.bins); });
    const SwapReport r = diversity_scan(ds.states, ds.ce_values, edges, c.pairs_per_bin, c.swap_shots,
                                        derive_seed(c.seed, "swap"), c.swap_threshold);
    write_config(c, out);
    write_file_atomic(out / "swap_report.txt", format_swap_report(r));
    log << fmt::format("{} pairs, mean p0 {:.4f}, collapsed {}\n", r.total_pairs, r.overall_mean_p0,
                       r.collapsed ? "yes" : "no");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generate and analyse quantum datasets with controlled entanglement distributions."};
    app.require_subcommand(1);
    Overrides o;
    std::string config_path;
    uint64_t seed = 0;
    int shots = 0;
    std::string noise;
    std::string out_dir = "cegen_out";
    bool quiet = false;
    app.add_option("--config", config_path, "INI config file")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "root seed (overrides [run] seed)");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--shots", shots, "shots per estimate, 0 = exact");
    app.add_option("--noise", noise, "noise model on or off")->check(CLI::IsMember({"on", "off"}));
    app.add_flag("--quiet", quiet, "no summary output");

    using Command = void (*)(const RunConfig&, const fs::path&, std::ostream&);
    const std::vector<std::tuple<std::string, std::string, Command>> commands{
        {"generate", "train a generator and emit a dataset", cmd_generate},
        {"sensors", "simulate the sensing protocols", cmd_sensors},
        {"classify", "cross-validate the CE classifier", cmd_classify},
        {"compare", "rank ansatz families across targets", cmd_compare},
        {"ce", "recompute CE of a dataset file", cmd_ce},
        {"swap", "SWAP-test diversity scan of a dataset file", cmd_swap},
    };
    for (const auto& [name, help, fn] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }
    try {
        if (!config_path.empty()) o.config = config_path;
        if (app.count("--seed")) o.seed = seed;
        if (app.count("--shots")) o.shots = shots;
        if (!noise.empty()) o.noise = noise == "on";
        const RunConfig config = resolve_config(o);
        std::ostringstream sink;
        std::ostream& log = quiet ? static_cast<std::ostream&>(sink) : out;
        for (const auto& [name, help, fn] : commands) {
            if (app.got_subcommand(name)) {
                fn(config, out_dir, log);
            }
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace cegen::cli
