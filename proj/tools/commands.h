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

#ifndef CEGEN_TOOLS_COMMANDS_H
#define CEGEN_TOOLS_COMMANDS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "cegen/config.h"

namespace cegen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

/// Command-line overrides applied on top of the config file.
struct Overrides {
    std::optional<std::filesystem::path> config;
    std::optional<uint64_t> seed;
    std::optional<int> shots;
    std::optional<bool> noise;
};

/// Loads the config (or the defaults) and applies the overrides. --shots
/// sets the shot count of whichever stage the command samples; --noise sets
/// noise.enabled and classify.noisy.
RunConfig resolve_config(const Overrides& overrides);

// Each command writes its artifacts plus the resolved config.ini under `out`
// and a short summary to `log`. Config problems throw ConfigError.
void cmd_generate(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
void cmd_sensors(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
void cmd_classify(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
void cmd_compare(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
void cmd_ce(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
void cmd_swap(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);

/// Full command line: parses flags, runs the subcommand, maps errors to exit
/// codes (2 config, 3 runtime).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cegen::cli

#endif
