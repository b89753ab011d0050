// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "commentlint/source.hpp"

namespace commentlint {

enum class RuleCategory { Content, Structure, Formatting, Syntax, WritingStyle, Other };

const char* to_string(RuleCategory category);
const char* display_name(RuleCategory category);
std::optional<RuleCategory> rule_category_from_string(std::string_view text);

/// Where a convention comes from: a community/organization style guide, or a
/// per-project guideline that extends or contradicts one.
struct GuidelineSource {
    enum class Kind { Oracle, GoogleJava, Pep257, Pep8, Numpy, GooglePython, ProjectSpecific };

    Kind kind = Kind::Oracle;
    std::string project;  // non-empty iff kind == ProjectSpecific

    bool is_project_specific() const { return kind == Kind::ProjectSpecific; }
    bool operator==(const GuidelineSource&) const = default;
    bool operator<(const GuidelineSource& other) const;
};

std::string to_string(const GuidelineSource& source);
std::optional<GuidelineSource> guideline_source_from_string(std::string_view text);

struct LanguageSet {
    bool java = false;
    bool python = false;

    bool contains(Language lang) const { return lang == Language::Java ? java : python; }
    bool empty() const { return !java && !python; }
    bool operator==(const LanguageSet&) const = default;
};

enum class RuleSeverity { Convention, Strict };

/// One machine-checkable convention. The applicability and followed
/// conditions are names resolved against the fixed predicate registry
/// (see predicates.hpp); the catalog document cannot embed code.
struct Rule {
    std::string id;
    RuleCategory category = RuleCategory::Other;
    std::vector<GuidelineSource> sources;  // every guideline that states the convention
    LanguageSet languages;
    std::string title;
    std::string anchor;        // the guideline sentence the rule encodes
    std::string applicability; // predicate name
    std::string followed;      // predicate name
    RuleSeverity severity = RuleSeverity::Strict;
    std::map<std::string, std::string> params;  // e.g. max_line_length

    /// Project-specific source if any, else the first source.
    const GuidelineSource& primary_source() const;
    int int_param(const std::string& key, int fallback) const;
    bool operator==(const Rule&) const = default;
};

struct PresetOverride {
    enum class Action { Disable, InvertToProhibition };
    std::string rule_id;
    Action action = Action::Disable;
};

/// A named bundle mapping a project (or a bare guideline) to its rule set:
/// the standard guidelines it claims plus any project-specific additions.
struct Preset {
    std::string name;
    Language language = Language::Java;
    std::vector<GuidelineSource> sources;     // standard guideline(s) + project source when one exists
    bool has_project_guideline = false;
    std::vector<std::string> rule_ids;        // resolved, catalog order
    std::vector<PresetOverride> overrides;
    std::map<std::string, std::map<std::string, std::string>> rule_params;
};

/// Catalog document problems carry a 1-based line anchor.
class SchemaError : public std::runtime_error {
public:
    SchemaError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_ = 0;
};

class UnknownPresetError : public std::runtime_error {
public:
    explicit UnknownPresetError(const std::string& name);
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// The rules shipped with the tool, in catalog order.
const std::vector<Rule>& builtin_rules();

/// Parses a catalog document and merges it over the built-in rules. A
/// document rule reusing a built-in id replaces that rule in place; a
/// duplicate id within the document is a SchemaError, as are unknown
/// category, source, language, severity, or predicate names.
///
/// Document format: one record per rule, records separated by blank lines,
/// `key: value` lines with `#` comments; continuation lines start with
/// whitespace. Keys: id, category, source, languages, title, anchor,
/// applicability, followed, severity, param.<name>. Override records use
/// `override: <rule-id>` plus `action: disable|invert-to-prohibition`.
std::vector<Rule> load_catalog(const std::string& document);

/// Canonical serialization of a catalog; load_catalog(serialize_catalog(c))
/// reproduces c exactly.
std::string serialize_catalog(const std::vector<Rule>& rules);

/// Known preset names: the bundled projects plus the bare guideline names.
std::vector<std::string> known_preset_names();

/// Resolves a project or guideline name (case-insensitive) against the
/// catalog. Throws UnknownPresetError listing the known names.
Preset resolve_preset(const std::string& name, const std::vector<Rule>& catalog = builtin_rules());

/// Materializes the preset's rules from the catalog: filters by source and
/// language, narrows each rule's source list to the preset's view, applies
/// overrides and per-rule params. Catalog order is preserved.
std::vector<Rule> resolve_rules(const Preset& preset, const std::vector<Rule>& catalog);

/// Every catalog rule that applies to `lang`, unnarrowed. This is the rule
/// set used when no preset is selected.
std::vector<Rule> rules_for_language(Language lang, const std::vector<Rule>& catalog);

}  // namespace commentlint
