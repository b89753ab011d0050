// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "commentlint/checks.hpp"
#include "commentlint/extract.hpp"
#include "commentlint/source.hpp"

namespace commentlint {

namespace {

struct FileTask {
    std::filesystem::path path;
    std::optional<Language> hint;
};

struct FileOutput {
    std::vector<Finding> findings;
    std::vector<std::string> errors;  // per-file diagnostics, file order preserved
};

std::optional<std::vector<Rule>> load_rule_catalog(const RunConfig& config, std::ostream& err) {
    if (!config.rule_catalog_path) return builtin_rules();
    std::ifstream in(*config.rule_catalog_path, std::ios::binary);
    if (!in) {
        err << "commentlint: cannot read rules file: "
            << config.rule_catalog_path->generic_string() << '\n';
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return load_catalog(buffer.str());
    } catch (const SchemaError& error) {
        err << "commentlint: " << config.rule_catalog_path->generic_string() << ": "
            << error.what() << '\n';
        return std::nullopt;
    }
}

// Directory walks keep only recognizable sources in scope; explicitly named
// files are always attempted so the user hears about problems with them.
std::optional<std::vector<FileTask>> collect_files(const RunConfig& config,
                                                   std::optional<Language> scope,
                                                   std::ostream& err) {
    std::vector<FileTask> tasks;
    for (const std::filesystem::path& path : config.paths) {
        std::error_code ec;
        if (std::filesystem::is_directory(path, ec)) {
            std::vector<FileTask> walked;
            for (auto it = std::filesystem::recursive_directory_iterator(path, ec);
                 !ec && it != std::filesystem::recursive_directory_iterator(); it.increment(ec)) {
                if (!it->is_regular_file(ec)) continue;
                const auto language = language_from_extension(it->path());
                if (!language) continue;
                if (scope && *language != *scope) continue;
                walked.push_back({it->path(), language});
            }
            if (ec) {
                err << "commentlint: cannot walk directory: " << path.generic_string() << ": "
                    << ec.message() << '\n';
                return std::nullopt;
            }
            tasks.insert(tasks.end(), walked.begin(), walked.end());
        } else if (std::filesystem::exists(path, ec)) {
            tasks.push_back({path, scope ? scope : language_from_extension(path)});
        } else {
            err << "commentlint: path does not exist: " << path.generic_string() << '\n';
            return std::nullopt;
        }
    }
    std::sort(tasks.begin(), tasks.end(), [](const FileTask& a, const FileTask& b) {
        return a.path.generic_string() < b.path.generic_string();
    });
    tasks.erase(std::unique(tasks.begin(), tasks.end(),
                            [](const FileTask& a, const FileTask& b) {
                                return a.path.generic_string() == b.path.generic_string();
                            }),
                tasks.end());
    return tasks;
}

FileOutput process_file(const FileTask& task, const std::vector<Rule>& rules) {
    FileOutput output;
    DecodeResult decoded = decode_source(task.path, task.hint);
    if (const DecodeError* error = std::get_if<DecodeError>(&decoded)) {
        output.errors.push_back("commentlint: " + error->path.generic_string() + ": " +
                                error->message);
        return output;
    }
    const SourceUnit& unit = std::get<SourceUnit>(decoded);
    const ExtractionResult extracted = extract_class_comments(unit);
    for (const ExtractionDiagnostic& diagnostic : extracted.diagnostics) {
        output.errors.push_back("commentlint: " + diagnostic.file + ":" +
                                std::to_string(diagnostic.line) + ": " + diagnostic.message);
    }
    for (const ClassCommentRecord& record : extracted.records) {
        const std::vector<Finding> findings = evaluate_comment(rules, record);
        output.findings.insert(output.findings.end(), findings.begin(), findings.end());
    }
    return output;
}

}  // namespace

RunOutcome run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunOutcome outcome;

    if (config.fail_threshold &&
        (*config.fail_threshold < 0.0 || *config.fail_threshold > 1.0)) {
        err << "commentlint: --fail-threshold must lie in [0,1]\n";
        outcome.exit_code = kExitConfigError;
        return outcome;
    }

    const std::optional<std::vector<Rule>> catalog = load_rule_catalog(config, err);
    if (!catalog) {
        outcome.exit_code = kExitConfigError;
        return outcome;
    }

    std::optional<Language> scope = config.language_filter;
    std::vector<Rule> rules;
    if (!config.preset_name.empty()) {
        Preset preset;
        try {
            preset = resolve_preset(config.preset_name, *catalog);
        } catch (const UnknownPresetError& error) {
            err << "commentlint: " << error.what() << '\n';
            outcome.exit_code = kExitConfigError;
            return outcome;
        }
        if (scope && *scope != preset.language) {
            err << "commentlint: preset '" << preset.name << "' covers "
                << to_string(preset.language) << " sources, which contradicts --lang "
                << to_string(*scope) << '\n';
            outcome.exit_code = kExitConfigError;
            return outcome;
        }
        scope = preset.language;
        rules = resolve_rules(preset, *catalog);
    } else {
        rules = scope ? rules_for_language(*scope, *catalog) : *catalog;
    }

    const std::optional<std::vector<FileTask>> tasks = collect_files(config, scope, err);
    if (!tasks) {
        outcome.exit_code = kExitConfigError;
        return outcome;
    }

    // Workers claim file slots; slot order, not completion order, decides the
    // output, so worker count cannot change a single byte.
    std::vector<FileOutput> slots(tasks->size());
    const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(tasks->size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks->size(); ++i) {
            slots[i] = process_file((*tasks)[i], rules);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&tasks, &slots, &rules, &next] {
                while (true) {
                    const std::size_t index = next.fetch_add(1);
                    if (index >= tasks->size()) return;
                    slots[index] = process_file((*tasks)[index], rules);
                }
            });
        }
        for (std::thread& worker : workers) worker.join();
    }

    std::vector<Finding> findings;
    for (const FileOutput& slot : slots) {
        for (const std::string& line : slot.errors) err << line << '\n';
        findings.insert(findings.end(), slot.findings.begin(), slot.findings.end());
    }

    outcome.report = aggregate(findings, rules);
    out << serialize(outcome.report, config.output_format);

    if (config.fail_threshold) {
        const std::optional<double> adherence = outcome.report.totals.adherence();
        if (adherence && *adherence < *config.fail_threshold) {
            outcome.exit_code = kExitThresholdFailed;
        }
    }
    return outcome;
}

}  // namespace commentlint
