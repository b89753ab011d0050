// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "commentlint/report.hpp"
#include "commentlint/rules.hpp"

namespace commentlint {

struct RunConfig {
    std::string preset_name;                              // empty -> all rules for the language
    std::optional<Language> language_filter;              // nullopt -> auto by extension
    std::optional<std::filesystem::path> rule_catalog_path;
    ReportFormat output_format = ReportFormat::Text;
    std::optional<double> fail_threshold;                 // in [0,1]
    std::vector<std::filesystem::path> paths;
    int jobs = 1;                                         // worker threads over files
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitThresholdFailed = 1;
inline constexpr int kExitConfigError = 2;

struct RunOutcome {
    int exit_code = kExitOk;
    AdherenceReport report;
};

/// Runs the whole pipeline: decode -> extract -> parse -> evaluate ->
/// aggregate -> serialize to `out`. Per-file problems go to `err` and do not
/// abort the corpus; configuration and IO errors on the arguments themselves
/// exit with kExitConfigError. Output is byte-identical for a given tree and
/// config, whatever the worker count.
RunOutcome run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace commentlint
