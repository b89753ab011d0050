// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commentlint/predicates.hpp"
#include "commentlint/rules.hpp"

namespace commentlint {
namespace {

struct Field {
    std::string value;
    int line = 0;
};

struct Record {
    int first_line = 0;
    std::vector<std::pair<std::string, Field>> fields;  // source order

    const Field* find(const std::string& key) const {
        for (const auto& [k, v] : fields) {
            if (k == key) return &v;
        }
        return nullptr;
    }
};

std::string trim_copy(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool blank_line(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

bool comment_line(std::string_view line) {
    const std::string t = trim_copy(line);
    return !t.empty() && t[0] == '#';
}

std::vector<std::string> split_tokens(std::string_view value) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(value)};
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

std::vector<Record> parse_records(const std::string& document) {
    std::vector<Record> records;
    Record current;
    bool in_record = false;
    int line_no = 0;
    std::size_t start = 0;
    const std::string& text = document;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string_view line(text.data() + start, end - start);
        ++line_no;
        const bool last = end == text.size();
        start = end + 1;

        if (comment_line(line)) {
            if (last) break;
            continue;
        }
        if (blank_line(line)) {
            if (in_record) {
                records.push_back(std::move(current));
                current = Record{};
                in_record = false;
            }
            if (last) break;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(line[0]))) {
            if (!in_record || current.fields.empty()) {
                throw SchemaError(line_no, "continuation line outside a record");
            }
            current.fields.back().second.value += " " + trim_copy(line);
            if (last) break;
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw SchemaError(line_no, "expected 'key: value'");
        }
        const std::string key = trim_copy(line.substr(0, colon));
        if (key.empty() || key.find(' ') != std::string::npos) {
            throw SchemaError(line_no, "invalid key '" + key + "'");
        }
        if (!in_record) {
            current.first_line = line_no;
            in_record = true;
        }
        if (current.find(key)) {
            throw SchemaError(line_no, "duplicate key '" + key + "' in record");
        }
        current.fields.emplace_back(key, Field{trim_copy(line.substr(colon + 1)), line_no});
        if (last) break;
    }
    if (in_record) records.push_back(std::move(current));
    return records;
}

const Field& require_field(const Record& record, const std::string& key) {
    const Field* field = record.find(key);
    if (!field || field->value.empty()) {
        throw SchemaError(record.first_line, "missing required key '" + key + "'");
    }
    return *field;
}

void check_predicate_name(const Field& field) {
    std::string name = field.value;
    if (!name.empty() && name[0] == '!') name.erase(0, 1);
    if (!is_known_predicate(name)) {
        throw SchemaError(field.line, "unknown predicate '" + field.value + "'");
    }
}

Rule parse_rule(const Record& record) {
    Rule rule;
    const Field& id = require_field(record, "id");
    if (id.value.find(',') != std::string::npos ||
        id.value.find(' ') != std::string::npos) {
        throw SchemaError(id.line, "invalid rule id '" + id.value + "'");
    }
    rule.id = id.value;

    const Field& category = require_field(record, "category");
    const auto parsed_category = rule_category_from_string(category.value);
    if (!parsed_category) {
        throw SchemaError(category.line, "unknown category '" + category.value + "'");
    }
    rule.category = *parsed_category;

    const Field& source = require_field(record, "source");
    for (const auto& token : split_tokens(source.value)) {
        const auto parsed = guideline_source_from_string(token);
        if (!parsed) throw SchemaError(source.line, "unknown source '" + token + "'");
        rule.sources.push_back(*parsed);
    }

    const Field& languages = require_field(record, "languages");
    for (const auto& token : split_tokens(languages.value)) {
        if (token == "java") {
            rule.languages.java = true;
        } else if (token == "python") {
            rule.languages.python = true;
        } else {
            throw SchemaError(languages.line, "unknown language '" + token + "'");
        }
    }

    rule.title = require_field(record, "title").value;
    rule.anchor = require_field(record, "anchor").value;

    const Field& applicability = require_field(record, "applicability");
    check_predicate_name(applicability);
    rule.applicability = applicability.value;

    const Field& followed = require_field(record, "followed");
    check_predicate_name(followed);
    rule.followed = followed.value;

    rule.severity = RuleSeverity::Convention;
    if (const Field* severity = record.find("severity")) {
        if (severity->value == "strict") {
            rule.severity = RuleSeverity::Strict;
        } else if (severity->value == "convention") {
            rule.severity = RuleSeverity::Convention;
        } else {
            throw SchemaError(severity->line, "unknown severity '" + severity->value + "'");
        }
    }

    for (const auto& [key, field] : record.fields) {
        static const std::vector<std::string> kKnown = {
            "id",     "category", "source",        "languages", "title",
            "anchor", "applicability", "followed", "severity",
        };
        if (std::find(kKnown.begin(), kKnown.end(), key) != kKnown.end()) continue;
        if (key.rfind("param.", 0) == 0 && key.size() > 6) {
            rule.params[key.substr(6)] = field.value;
            continue;
        }
        throw SchemaError(field.line, "unknown key '" + key + "'");
    }
    return rule;
}

}  // namespace

std::vector<Rule> load_catalog(const std::string& document) {
    std::vector<Rule> catalog = builtin_rules();
    std::vector<std::string> document_ids;

    for (const Record& record : parse_records(document)) {
        if (const Field* target = record.find("override")) {
            for (const auto& [key, field] : record.fields) {
                if (key != "override" && key != "action") {
                    throw SchemaError(field.line, "unknown key '" + key + "' in override");
                }
            }
            const Field& action = require_field(record, "action");
            auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Rule& r) {
                return r.id == target->value;
            });
            if (it == catalog.end()) {
                throw SchemaError(target->line, "override of unknown rule '" +
                                                    target->value + "'");
            }
            if (action.value == "disable") {
                catalog.erase(it);
            } else if (action.value == "invert-to-prohibition") {
                if (it->followed.rfind('!', 0) != 0) it->followed = "!" + it->followed;
            } else {
                throw SchemaError(action.line, "unknown action '" + action.value + "'");
            }
            continue;
        }

        Rule rule = parse_rule(record);
        if (std::find(document_ids.begin(), document_ids.end(), rule.id) !=
            document_ids.end()) {
            throw SchemaError(record.find("id")->line,
                              "duplicate id '" + rule.id + "'");
        }
        document_ids.push_back(rule.id);

        auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const Rule& r) { return r.id == rule.id; });
        if (it != catalog.end()) {
            *it = std::move(rule);  // replaces the built-in in place
        } else {
            catalog.push_back(std::move(rule));
        }
    }
    return catalog;
}

std::string serialize_catalog(const std::vector<Rule>& rules) {
    std::string out;
    bool first = true;
    for (const Rule& rule : rules) {
        if (!first) out += "\n";
        first = false;
        out += "id: " + rule.id + "\n";
        out += "category: " + std::string(to_string(rule.category)) + "\n";
        std::string sources;
        for (const auto& source : rule.sources) {
            if (!sources.empty()) sources += " ";
            sources += to_string(source);
        }
        out += "source: " + sources + "\n";
        std::string languages;
        if (rule.languages.java) languages = "java";
        if (rule.languages.python) languages += languages.empty() ? "python" : " python";
        out += "languages: " + languages + "\n";
        out += "title: " + rule.title + "\n";
        out += "anchor: " + rule.anchor + "\n";
        out += "applicability: " + rule.applicability + "\n";
        out += "followed: " + rule.followed + "\n";
        out += "severity: ";
        out += rule.severity == RuleSeverity::Strict ? "strict" : "convention";
        out += "\n";
        for (const auto& [key, value] : rule.params) {
            out += "param." + key + ": " + value + "\n";
        }
    }
    return out;
}

}  // namespace commentlint
