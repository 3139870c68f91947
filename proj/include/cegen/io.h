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

#ifndef CEGEN_IO_H
#define CEGEN_IO_H

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "cegen/diversity.h"
#include "cegen/generator.h"
#include "cegen/histogram.h"
#include "cegen/qml.h"
#include "cegen/target.h"

namespace cegen {

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

/// Dataset text format:
///
///     # cegen dataset
///     # key = value            (metadata, in order)
///     # columns = sample_id ce_value [ce_full] re_0 im_0 re_1 im_1 ...
///     <rows>
///
/// Numbers carry 17 significant digits, so a write/read cycle is exact.
std::string format_dataset(const Dataset& dataset);

/// Throws ConfigError on a malformed file.
Dataset parse_dataset(std::istream& in, const std::string& source = "<dataset>");
Dataset read_dataset(const std::filesystem::path& path);
void write_dataset(const std::filesystem::path& path, const Dataset& dataset);

/// bin_low bin_high generated target
std::string format_histogram(const CEHistogram& generated, const CEHistogram& target);

/// bin_low bin_high mean_p0 pair_count, plus a summary header.
std::string format_swap_report(const SwapReport& report);

/// Config echo, summary values and the cost trace.
std::string format_run(const GenerationRun& run, std::string_view config_text);

struct ClassifyModeReport {
    std::string mode;
    CVReport report;
};

/// mode fold accuracy precision recall f1 relative_accuracy; one row per
/// fold and one "mean" row per mode. Relative accuracy is against
/// `baseline_accuracy`.
std::string format_cv_table(const std::vector<ClassifyModeReport>& modes, double baseline_accuracy);

/// family mean_tvd median_tvd tvd_variance avg_rank, then per-target TVDs.
std::string format_comparison(const ComparisonTable& table);

}  // namespace cegen

#endif
