// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/rules.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>

namespace commentlint {
namespace {

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

GuidelineSource std_source(GuidelineSource::Kind kind) { return {kind, ""}; }

GuidelineSource project_source(std::string name) {
    return {GuidelineSource::Kind::ProjectSpecific, std::move(name)};
}

std::vector<GuidelineSource> all_standard_sources() {
    using K = GuidelineSource::Kind;
    return {std_source(K::Oracle), std_source(K::GoogleJava), std_source(K::Pep257),
            std_source(K::Pep8),   std_source(K::Numpy),      std_source(K::GooglePython)};
}

constexpr LanguageSet kJavaOnly{true, false};
constexpr LanguageSet kPythonOnly{false, true};
constexpr LanguageSet kBothLanguages{true, true};

Rule make_rule(std::string id, RuleCategory category, std::vector<GuidelineSource> sources,
               LanguageSet languages, std::string title, std::string anchor,
               std::string applicability, std::string followed,
               RuleSeverity severity = RuleSeverity::Convention) {
    Rule rule;
    rule.id = std::move(id);
    rule.category = category;
    rule.sources = std::move(sources);
    rule.languages = languages;
    rule.title = std::move(title);
    rule.anchor = std::move(anchor);
    rule.applicability = std::move(applicability);
    rule.followed = std::move(followed);
    rule.severity = severity;
    return rule;
}

}  // namespace

const char* to_string(RuleCategory category) {
    switch (category) {
        case RuleCategory::Content: return "content";
        case RuleCategory::Structure: return "structure";
        case RuleCategory::Formatting: return "formatting";
        case RuleCategory::Syntax: return "syntax";
        case RuleCategory::WritingStyle: return "writing-style";
        case RuleCategory::Other: return "other";
    }
    return "other";
}

const char* display_name(RuleCategory category) {
    switch (category) {
        case RuleCategory::Content: return "Content";
        case RuleCategory::Structure: return "Structure";
        case RuleCategory::Formatting: return "Formatting";
        case RuleCategory::Syntax: return "Syntax";
        case RuleCategory::WritingStyle: return "Writing Style";
        case RuleCategory::Other: return "Other";
    }
    return "Other";
}

std::optional<RuleCategory> rule_category_from_string(std::string_view text) {
    static constexpr std::array<RuleCategory, 6> kAll = {
        RuleCategory::Content,   RuleCategory::Structure, RuleCategory::Formatting,
        RuleCategory::Syntax,    RuleCategory::WritingStyle, RuleCategory::Other,
    };
    for (RuleCategory c : kAll) {
        if (text == to_string(c)) return c;
    }
    return std::nullopt;
}

bool GuidelineSource::operator<(const GuidelineSource& other) const {
    return std::tie(kind, project) < std::tie(other.kind, other.project);
}

std::string to_string(const GuidelineSource& source) {
    switch (source.kind) {
        case GuidelineSource::Kind::Oracle: return "oracle";
        case GuidelineSource::Kind::GoogleJava: return "google-java";
        case GuidelineSource::Kind::Pep257: return "pep257";
        case GuidelineSource::Kind::Pep8: return "pep8";
        case GuidelineSource::Kind::Numpy: return "numpy";
        case GuidelineSource::Kind::GooglePython: return "google-python";
        case GuidelineSource::Kind::ProjectSpecific: return "project:" + source.project;
    }
    return "oracle";
}

std::optional<GuidelineSource> guideline_source_from_string(std::string_view text) {
    using K = GuidelineSource::Kind;
    if (text == "oracle") return std_source(K::Oracle);
    if (text == "google-java") return std_source(K::GoogleJava);
    if (text == "pep257") return std_source(K::Pep257);
    if (text == "pep8") return std_source(K::Pep8);
    if (text == "numpy") return std_source(K::Numpy);
    if (text == "google-python") return std_source(K::GooglePython);
    if (text.rfind("project:", 0) == 0 && text.size() > 8) {
        return project_source(std::string(text.substr(8)));
    }
    return std::nullopt;
}

const GuidelineSource& Rule::primary_source() const {
    for (const auto& source : sources) {
        if (source.is_project_specific()) return source;
    }
    return sources.front();
}

int Rule::int_param(const std::string& key, int fallback) const {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        return fallback;
    }
}

SchemaError::SchemaError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

UnknownPresetError::UnknownPresetError(const std::string& name)
    : std::runtime_error([&] {
          std::string msg = "unknown preset '" + name + "'; known presets:";
          for (const auto& known : known_preset_names()) msg += " " + known;
          return msg;
      }()),
      name_(name) {}

const std::vector<Rule>& builtin_rules() {
    using K = GuidelineSource::Kind;
    static const std::vector<Rule> kRules = [] {
        std::vector<Rule> rules;
        rules.push_back(make_rule(
            "ORA-3P", RuleCategory::WritingStyle, {std_source(K::Oracle)}, kJavaOnly,
            "Summary verb in third person",
            "Use 3rd person (descriptive), not 2nd person (prescriptive)",
            "summary_mood_determinable", "summary_third_person"));
        rules.push_back(make_rule(
            "ORA-FIXME", RuleCategory::Syntax, {std_source(K::Oracle)}, kJavaOnly,
            "Bogus or broken code flagged with FIXME",
            "use FIXME to flag something that is bogus or broken",
            "has_bogus_marker", "bogus_marker_is_fixme"));
        rules.push_back(make_rule(
            "ORA-SERIAL", RuleCategory::Content, {std_source(K::Oracle)}, kJavaOnly,
            "Serializable classes document their serial form",
            "use @serial tag in class comment",
            "mentions_serial_form", "has_serial_tag"));
        rules.push_back(make_rule(
            "ORA-DEPR", RuleCategory::Content, {std_source(K::Oracle)}, kJavaOnly,
            "Deprecated classes name a replacement",
            "for the @deprecated tag, suggest what item to use instead",
            "has_deprecated_tag", "deprecation_names_replacement"));
        rules.push_back(make_rule(
            "SPARK-P", RuleCategory::Syntax, {project_source("spark")}, kJavaOnly,
            "Paragraphs separated with the HTML paragraph tag",
            "separate the paragraphs with a <p> paragraph tag",
            "has_multiple_paragraphs", "paragraphs_use_html_tag"));
        rules.push_back(make_rule(
            "HAD-AUTH", RuleCategory::Content, {project_source("hadoop")}, kJavaOnly,
            "No author tags",
            "Do not use @author tags",
            "always", "no_author_tag"));
        rules.push_back(make_rule(
            "NUM-EXT", RuleCategory::Content, {std_source(K::Numpy)}, kPythonOnly,
            "Extended summary present",
            "a few sentences giving an extended summary of the class or method "
            "after the short (one-line) summary",
            "has_summary", "has_extended_summary"));
        rules.push_back(make_rule(
            "NUM-BLANK", RuleCategory::Structure, {std_source(K::Numpy)}, kPythonOnly,
            "Blank line between short and extended summary",
            "there should be a blank line between the short summary and extended summary",
            "has_summary_and_extended", "blank_line_after_summary"));
        rules.push_back(make_rule(
            "PEP-LIST", RuleCategory::Content, {std_source(K::Pep257)}, kPythonOnly,
            "Class docstrings enumerate the public API",
            "Docstrings for a class should list public methods and instance variables",
            "has_visible_members", "mentions_all_members"));
        rules.push_back(make_rule(
            "JD-ORDER", RuleCategory::Structure, {std_source(K::Oracle)}, kJavaOnly,
            "Block tags in canonical order",
            "Include block tags in the order @author, @version, @param, @return, "
            "@throws, @see, @since, @serial, @deprecated",
            "has_ordered_tags", "tags_in_canonical_order"));
        rules.push_back(make_rule(
            "WS-CAP", RuleCategory::WritingStyle, all_standard_sources(), kBothLanguages,
            "Summary starts with a capital letter",
            "Begin the summary with a capital letter",
            "summary_starts_with_letter", "summary_capitalized"));
        rules.push_back(make_rule(
            "WS-PERIOD", RuleCategory::WritingStyle,
            {std_source(K::Oracle), std_source(K::Pep257)}, kBothLanguages,
            "Summary ends with a period",
            "End the summary with a period",
            "has_summary", "summary_ends_with_period"));
        Rule linelen = make_rule(
            "FMT-LINELEN", RuleCategory::Formatting, all_standard_sources(),
            kBothLanguages, "Comment lines within the line length limit",
            "Keep every comment line within the line length limit",
            "comment_present", "lines_within_limit");
        linelen.params["max_line_length"] = "80";
        rules.push_back(std::move(linelen));
        rules.push_back(make_rule(
            "FMT-INDENT", RuleCategory::Formatting, all_standard_sources(),
            kBothLanguages, "Continuation lines share one gutter column",
            "Indent continuation lines to a consistent gutter column",
            "is_multiline", "gutter_aligned"));
        rules.push_back(make_rule(
            "CNT-PRESENT", RuleCategory::Content, all_standard_sources(), kBothLanguages,
            "Class has a documentation comment",
            "Document every public class with a summary comment",
            "always", "comment_present", RuleSeverity::Strict));
        return rules;
    }();
    return kRules;
}

namespace {

struct PresetSpec {
    const char* name;
    Language language;
    std::vector<GuidelineSource> sources;
    bool has_project_guideline;
    bool google_line_length;
};

const std::vector<PresetSpec>& preset_table() {
    using K = GuidelineSource::Kind;
    static const std::vector<PresetSpec> kTable = {
        {"eclipse", Language::Java, {std_source(K::Oracle)}, true, false},
        {"hadoop", Language::Java, {std_source(K::Oracle), project_source("hadoop")},
         true, false},
        {"vaadin", Language::Java, {std_source(K::Oracle)}, true, false},
        {"spark", Language::Java, {std_source(K::Oracle), project_source("spark")},
         true, false},
        {"guava", Language::Java, {std_source(K::GoogleJava)}, false, true},
        {"guice", Language::Java, {std_source(K::GoogleJava)}, false, true},
        {"django", Language::Python, {std_source(K::Pep8), std_source(K::Pep257)},
         true, false},
        {"requests", Language::Python, {std_source(K::Pep8), std_source(K::Pep257)},
         true, false},
        {"pipenv", Language::Python, {std_source(K::Pep8), std_source(K::Pep257)},
         false, false},
        {"mailpile", Language::Python, {std_source(K::Pep8), std_source(K::Pep257)},
         false, false},
        {"pandas", Language::Python, {std_source(K::Numpy)}, true, false},
        {"ipython", Language::Python,
         {std_source(K::Pep8), std_source(K::Pep257), std_source(K::Numpy)}, true, false},
        {"pytorch", Language::Python, {std_source(K::GooglePython)}, true, true},
        {"oracle", Language::Java, {std_source(K::Oracle)}, false, false},
        {"google-java", Language::Java, {std_source(K::GoogleJava)}, false, true},
        {"pep257", Language::Python, {std_source(K::Pep257)}, false, false},
        {"pep8", Language::Python, {std_source(K::Pep8)}, false, false},
        {"numpy", Language::Python, {std_source(K::Numpy)}, false, false},
        {"google-python", Language::Python, {std_source(K::GooglePython)}, false, true},
    };
    return kTable;
}

bool sources_intersect(const std::vector<GuidelineSource>& a,
                       const std::vector<GuidelineSource>& b) {
    for (const auto& x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> known_preset_names() {
    std::vector<std::string> names;
    names.reserve(preset_table().size());
    for (const auto& spec : preset_table()) names.emplace_back(spec.name);
    return names;
}

Preset resolve_preset(const std::string& name, const std::vector<Rule>& catalog) {
    const std::string key = lowercase(name);
    const PresetSpec* spec = nullptr;
    for (const auto& candidate : preset_table()) {
        if (key == candidate.name) {
            spec = &candidate;
            break;
        }
    }
    if (!spec) throw UnknownPresetError(name);

    Preset preset;
    preset.name = spec->name;
    preset.language = spec->language;
    preset.sources = spec->sources;
    preset.has_project_guideline = spec->has_project_guideline;
    for (const auto& rule : catalog) {
        if (!rule.languages.contains(preset.language)) continue;
        if (!sources_intersect(rule.sources, preset.sources)) continue;
        preset.rule_ids.push_back(rule.id);
    }
    if (spec->google_line_length) {
        preset.rule_params["FMT-LINELEN"]["max_line_length"] = "100";
    }
    return preset;
}

std::vector<Rule> resolve_rules(const Preset& preset, const std::vector<Rule>& catalog) {
    std::vector<Rule> active;
    for (const auto& rule : catalog) {
        if (std::find(preset.rule_ids.begin(), preset.rule_ids.end(), rule.id) ==
            preset.rule_ids.end()) {
            continue;
        }
        if (!rule.languages.contains(preset.language)) continue;
        bool disabled = false;
        bool inverted = false;
        for (const auto& override_entry : preset.overrides) {
            if (override_entry.rule_id != rule.id) continue;
            if (override_entry.action == PresetOverride::Action::Disable) disabled = true;
            if (override_entry.action == PresetOverride::Action::InvertToProhibition) {
                inverted = true;
            }
        }
        if (disabled) continue;

        Rule resolved = rule;
        std::vector<GuidelineSource> narrowed;
        for (const auto& source : rule.sources) {
            if (std::find(preset.sources.begin(), preset.sources.end(), source) !=
                preset.sources.end()) {
                narrowed.push_back(source);
            }
        }
        if (!narrowed.empty()) resolved.sources = std::move(narrowed);
        const auto params_it = preset.rule_params.find(rule.id);
        if (params_it != preset.rule_params.end()) {
            for (const auto& [key, value] : params_it->second) {
                resolved.params[key] = value;
            }
        }
        // A prohibition inversion negates the followed condition in place;
        // the evaluator understands the '!' prefix.
        if (inverted && resolved.followed.rfind('!', 0) != 0) {
            resolved.followed = "!" + resolved.followed;
        }
        active.push_back(std::move(resolved));
    }
    return active;
}

std::vector<Rule> rules_for_language(Language lang, const std::vector<Rule>& catalog) {
    std::vector<Rule> active;
    for (const auto& rule : catalog) {
        if (rule.languages.contains(lang)) active.push_back(rule);
    }
    return active;
}

}  // namespace commentlint
