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

#include "cegen/io.h"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "cegen/error.h"

namespace cegen {

namespace {

constexpr std::string_view kDatasetMarker = "# cegen dataset";

std::string num(double v) { return fmt::format("{:>24.17g}", v); }

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

double to_double(std::string_view t, const std::string& where) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || end != t.data() + t.size()) {
        throw ConfigError(fmt::format("{}: '{}' is not a number", where, t));
    }
    return v;
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.close();
        if (!out) {
            throw Error(fmt::format("failed to write '{}'", tmp.string()));
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(fmt::format("cannot open '{}'", path.string()));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_dataset(const Dataset& d) {
    if (d.states.size() != d.ce_values.size() || (!d.ce_full.empty() && d.ce_full.size() != d.states.size())) {
        throw ContractViolation("dataset columns have different lengths");
    }
    const bool full = !d.ce_full.empty();
    std::string out(kDatasetMarker);
    out += '\n';
    for (const auto& [k, v] : d.metadata) {
        out += fmt::format("# {} = {}\n", k, v);
    }
    out += "# columns = sample_id ce_value";
    if (full) out += " ce_full";
    const size_t dim = size_t{1} << d.num_qubits;
    for (size_t a = 0; a < dim; ++a) {
        out += fmt::format(" re_{} im_{}", a, a);
    }
    out += '\n';
    for (size_t i = 0; i < d.states.size(); ++i) {
        if (d.states[i].num_qubits() != d.num_qubits) {
            throw ContractViolation(fmt::format("state {} has {} qubits, dataset has {}", i, d.states[i].num_qubits(),
                                                d.num_qubits));
        }
        out += fmt::format("{:>6}", i);
        out += num(d.ce_values[i]);
        if (full) out += num(d.ce_full[i]);
        for (const auto& a : d.states[i].amplitudes()) {
            out += num(a.real());
            out += num(a.imag());
        }
        out += '\n';
    }
    return out;
}

Dataset parse_dataset(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != kDatasetMarker) {
        throw ConfigError(fmt::format("{}: not a dataset file (missing '{}' header)", source, kDatasetMarker));
    }
    Dataset d;
    bool full = false;
    bool have_columns = false;
    size_t dim = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = fmt::format("{}:{}", source, line_no);
        if (trim(line).empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(fmt::format("{}: header line without '='", where));
            }
            const std::string key = trim(std::string_view(line).substr(1, eq - 1));
            const std::string value = trim(std::string_view(line).substr(eq + 1));
            if (key == "columns") {
                const auto cols = split_ws(value);
                full = cols.size() > 2 && cols[2] == "ce_full";
                const size_t amp_cols = cols.size() - 2 - (full ? 1 : 0);
                dim = amp_cols / 2;
                if (cols.size() < 4 || amp_cols % 2 != 0 || dim == 0 || (dim & (dim - 1)) != 0) {
                    throw ConfigError(fmt::format("{}: malformed column list", where));
                }
                d.num_qubits = std::countr_zero(dim);
                have_columns = true;
            } else {
                d.metadata.emplace_back(key, value);
            }
            continue;
        }
        if (!have_columns) {
            throw ConfigError(fmt::format("{}: data row before the columns header", where));
        }
        const auto tok = split_ws(line);
        const size_t expect = 2 + (full ? 1 : 0) + 2 * dim;
        if (tok.size() != expect) {
            throw ConfigError(fmt::format("{}: expected {} columns, got {}", where, expect, tok.size()));
        }
        size_t c = 1;
        d.ce_values.push_back(to_double(tok[c++], where));
        if (full) d.ce_full.push_back(to_double(tok[c++], where));
        std::vector<Complex> amps(dim);
        for (auto& a : amps) {
            const double re = to_double(tok[c++], where);
            a = {re, to_double(tok[c++], where)};
        }
        d.states.emplace_back(d.num_qubits, std::move(amps));
    }
    if (!have_columns) {
        throw ConfigError(fmt::format("{}: missing columns header", source));
    }
    return d;
}

Dataset read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("cannot open dataset '{}'", path.string()));
    }
    return parse_dataset(in, path.string());
}

void write_dataset(const std::filesystem::path& path, const Dataset& dataset) {
    write_file_atomic(path, format_dataset(dataset));
}

std::string format_histogram(const CEHistogram& generated, const CEHistogram& target) {
    if (generated.bin_edges != target.bin_edges) {
        throw ContractViolation("histograms have different bin edges");
    }
    std::string out = "# bin_low bin_high generated target\n";
    for (size_t b = 0; b < generated.masses.size(); ++b) {
        out += fmt::format("{:.6f} {:.6f} {:.10f} {:.10f}\n", generated.bin_edges[b], generated.bin_edges[b + 1],
                           generated.masses[b], target.masses[b]);
    }
    return out;
}

std::string format_swap_report(const SwapReport& r) {
    std::string out = fmt::format("# threshold = {}\n# overall_mean_p0 = {:.10f}\n# total_pairs = {}\n# collapsed = {}\n",
                                  r.threshold, r.overall_mean_p0, r.total_pairs, r.collapsed ? "true" : "false");
    out += "# bin_low bin_high mean_p0 pair_count\n";
    for (const auto& b : r.bins) {
        out += fmt::format("{:.6f} {:.6f} {:.10f} {}\n", b.low, b.high, b.mean_p0, b.pair_count);
    }
    return out;
}

std::string format_run(const GenerationRun& run, std::string_view config_text) {
    std::string out = "# config\n";
    std::istringstream cfg{std::string(config_text)};
    std::string line;
    while (std::getline(cfg, line)) {
        out += "#   " + line + "\n";
    }
    out += fmt::format("# best_cost = {:.17g}\n", run.best_cost);
    if (run.refined_cost) {
        out += fmt::format("# refined_cost = {:.17g}\n", *run.refined_cost);
    }
    out += fmt::format("# final_tvd = {:.17g}\n# initial_tvd = {:.17g}\n# evaluations = {}\n", run.final_tvd,
                       run.initial_tvd, run.evaluations);
    out += "# best_params =";
    for (double p : run.best_params) {
        out += fmt::format(" {:.17g}", p);
    }
    out += "\n# iteration cost\n";
    for (size_t i = 0; i < run.cost_trace.size(); ++i) {
        out += fmt::format("{} {:.17g}\n", i, run.cost_trace[i]);
    }
    return out;
}

std::string format_cv_table(const std::vector<ClassifyModeReport>& modes, double baseline_accuracy) {
    std::string out = "# mode fold accuracy precision recall f1 relative_accuracy\n";
    auto row = [&](const std::string& mode, const std::string& fold, const FoldMetrics& m) {
        const double rel = baseline_accuracy > 0 ? m.accuracy / baseline_accuracy : 0.0;
        out += fmt::format("{} {} {:.6f} {:.6f} {:.6f} {:.6f} {:.6f}\n", mode, fold, m.accuracy, m.precision, m.recall,
                           m.f1, rel);
    };
    for (const auto& mode : modes) {
        for (const auto& f : mode.report.per_fold) {
            row(mode.mode, std::to_string(f.fold_index), f);
        }
        row(mode.mode, "mean", mode.report.mean);
    }
    return out;
}

std::string format_comparison(const ComparisonTable& table) {
    std::string out = "# family mean_tvd median_tvd tvd_variance avg_rank\n";
    for (const auto& r : table.rows) {
        out += fmt::format("{} {:.6f} {:.6f} {:.6f} {:.4f}\n", family_name(r.family), r.mean_tvd, r.median_tvd,
                           r.tvd_variance, r.avg_rank);
    }
    out += "# per-target tvd (rank)\n# family";
    for (const auto& t : table.target_names) {
        out += " " + t;
    }
    out += "\n";
    for (const auto& r : table.rows) {
        out += std::string(family_name(r.family));
        for (size_t j = 0; j < r.tvds.size(); ++j) {
            out += fmt::format(" {:.6f}({:g})", r.tvds[j], r.ranks[j]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace cegen
