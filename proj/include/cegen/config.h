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

#ifndef CEGEN_CONFIG_H
#define CEGEN_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "cegen/ansatz.h"
#include "cegen/generator.h"
#include "cegen/qml.h"
#include "cegen/sensors.h"
#include "cegen/simulator.h"
#include "cegen/target.h"

namespace cegen {

/// Every setting of every subcommand, with defaults. One INI file holds a
/// whole run; sections that a subcommand does not read are ignored by it.
struct RunConfig {
    // [run]
    uint64_t seed = 0;

    // [ansatz], [target]
    AnsatzSpec ansatz;
    TargetKind target = TargetKind::Gaussian;
    TargetParams target_params;
    double ce_max = kDefaultCEMax;
    int bins = kDefaultBins;

    // [anneal], [generator]
    GeneratorConfig generator;
    int dataset_size = 1000;
    int dataset_shots = 0;

    // [noise]
    bool noise_enabled = false;
    NoiseSpec noise;

    // [diversity]
    int pairs_per_bin = kDefaultPairsPerBin;
    int swap_shots = 0;
    double swap_threshold = kDefaultCollapseThreshold;

    // [sensors], [soil], [dark_matter]
    std::vector<std::string> protocols{"soil", "dark_matter"};
    SoilConfig soil;
    double phi_soil_high = 1.0;
    double phi_soil_low = 0.4;
    DarkMatterConfig dark_matter;
    double phi_weak = 0.01;
    double phi_strong = 0.1;

    // [classify]
    std::string classify_low;
    std::string classify_high;
    int per_class = 200;
    int folds = 5;
    bool classify_noisy = true;
    ClassifierSpec classifier;
    QmlConfig qml;

    // [compare]
    std::vector<AnsatzFamily> compare_families{AnsatzFamily::A1, AnsatzFamily::A2, AnsatzFamily::A3, AnsatzFamily::A4};
    std::vector<TargetKind> compare_targets{TargetKind::Uniform, TargetKind::Gaussian, TargetKind::WeibullLeft,
                                            TargetKind::WeibullRight};
    int compare_iterations = 300;

    // [ce], [swap]
    std::string input;
    CEMethod ce_method = CEMethod::FullPowerset;
    int ce_k = 1;
    int ce_shots = 0;

    RunConfig();
};

/// One documented key of the schema.
struct ConfigField {
    std::string section;
    std::string key;
    std::string doc;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

const std::vector<ConfigField>& config_schema();

/// Parses INI text. Every key must sit in a known section and be known to
/// the schema. Throws ConfigError naming the line (syntax) or the
/// section.key (unknown key, bad value).
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// The fully resolved config, defaults included, in schema order. Parsing
/// the result gives back an identical config.
std::string emit_config(const RunConfig& config);

}  // namespace cegen

#endif
