// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commentlint/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Checks class documentation comments against style guide conventions.",
                 "commentlint"};

    std::string preset;
    std::string lang = "auto";
    std::string format = "text";
    std::optional<std::string> rules_path;
    std::optional<double> fail_threshold;
    int jobs = 1;
    std::vector<std::string> paths;

    app.add_option("--preset", preset,
                   "project or guideline preset selecting the rule set");
    app.add_option("--lang", lang, "language filter for directory walks")
        ->check(CLI::IsMember({"auto", "java", "python"}))
        ->capture_default_str();
    app.add_option("--rules", rules_path, "rule catalog document overriding the built-ins")
        ->envname("COMMENTLINT_RULES");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--fail-threshold", fail_threshold,
                   "exit 1 when overall adherence falls below this fraction")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--jobs", jobs, "worker threads over files")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("paths", paths, "source files or directories")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "commentlint: " << e.what() << '\n';
        return commentlint::kExitConfigError;
    }

    commentlint::RunConfig config;
    config.preset_name = preset;
    if (lang == "java") config.language_filter = commentlint::Language::Java;
    if (lang == "python") config.language_filter = commentlint::Language::Python;
    if (rules_path) config.rule_catalog_path = *rules_path;
    config.output_format = *commentlint::report_format_from_string(format);
    config.fail_threshold = fail_threshold;
    config.jobs = jobs;
    config.paths.assign(paths.begin(), paths.end());

    return commentlint::run(config, std::cout, std::cerr).exit_code;
}
