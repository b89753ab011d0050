// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace commentlint {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr RuleCategory kCategories[] = {
    RuleCategory::Content,   RuleCategory::Structure,    RuleCategory::Formatting,
    RuleCategory::Syntax,    RuleCategory::WritingStyle, RuleCategory::Other,
};

bool finding_before(const Finding& a, const Finding& b) {
    return std::tie(a.file, a.line, a.rule_id) < std::tie(b.file, b.line, b.rule_id);
}

void sort_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), finding_before);
}

// Comment keys order per_comment; std::map iteration gives (file, line, class).
using CommentKey = std::tuple<std::string, int, std::string>;

std::vector<PerCommentStats> to_rows(const std::map<CommentKey, VerdictCounts>& grouped) {
    std::vector<PerCommentStats> rows;
    rows.reserve(grouped.size());
    for (const auto& [key, counts] : grouped) {
        rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), counts});
    }
    return rows;
}

// Recomputed from scratch after every merge, always over the same sorted rows
// in the same order, so merged reports match direct aggregation bit for bit.
std::optional<Distribution> compute_distribution(const std::vector<PerCommentStats>& rows) {
    if (rows.empty()) return std::nullopt;
    Distribution sum;
    for (const PerCommentStats& row : rows) {
        const double total = static_cast<double>(row.counts.total());
        if (total == 0.0) continue;  // defensive; a comment always has in-scope rules
        sum.followed += static_cast<double>(row.counts.followed) / total;
        sum.violated += static_cast<double>(row.counts.violated) / total;
        sum.not_applicable += static_cast<double>(row.counts.not_applicable) / total;
    }
    const double n = static_cast<double>(rows.size());
    return Distribution{sum.followed / n, sum.violated / n, sum.not_applicable / n};
}

long count_distinct_files(const std::vector<Finding>& findings) {
    std::set<std::string> files;
    for (const Finding& finding : findings) files.insert(finding.file);
    return static_cast<long>(files.size());
}

void tally(AdherenceReport& report, const Finding& finding) {
    VerdictCounts& by_category = report.per_category[finding.category];
    VerdictCounts& by_rule = report.per_rule[finding.rule_id];
    VerdictCounts& by_source = finding.source.is_project_specific() ? report.project_counts
                                                                    : report.standard_counts;
    switch (finding.verdict) {
        case Verdict::Followed:
            ++report.totals.followed;
            ++by_category.followed;
            ++by_rule.followed;
            ++by_source.followed;
            break;
        case Verdict::Violated:
            ++report.totals.violated;
            ++by_category.violated;
            ++by_rule.violated;
            ++by_source.violated;
            break;
        case Verdict::NotApplicable:
            ++report.totals.not_applicable;
            ++by_category.not_applicable;
            ++by_rule.not_applicable;
            ++by_source.not_applicable;
            break;
    }
}

std::string format_percent(double fraction) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f%%", fraction * 100.0);
    return buffer;
}

std::string format_adherence(const std::optional<double>& value) {
    return value ? format_percent(*value) : std::string("undefined");
}

ordered_json counts_json(const VerdictCounts& counts) {
    ordered_json object;
    object["followed"] = counts.followed;
    object["violated"] = counts.violated;
    object["not_applicable"] = counts.not_applicable;
    return object;
}

ordered_json adherence_json(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string serialize_csv(const AdherenceReport& report) {
    std::string out = "file,line,class,rule_id,category,source,verdict,evidence\n";
    for (const Finding& finding : report.findings) {
        out += csv_escape(finding.file);
        out += ',';
        out += std::to_string(finding.line);
        out += ',';
        out += csv_escape(finding.class_qualified_name);
        out += ',';
        out += csv_escape(finding.rule_id);
        out += ',';
        out += to_string(finding.category);
        out += ',';
        out += csv_escape(to_string(finding.source));
        out += ',';
        out += to_string(finding.verdict);
        out += ',';
        out += csv_escape(finding.evidence);
        out += '\n';
    }
    return out;
}

// Rule ids in presentation order: the catalog order the report was built
// with, then any stragglers from foreign findings in map order.
std::vector<std::string> presentation_rule_ids(const AdherenceReport& report) {
    std::vector<std::string> ids = report.rule_order;
    std::set<std::string> known(ids.begin(), ids.end());
    for (const auto& [id, counts] : report.per_rule) {
        if (!known.count(id)) ids.push_back(id);
    }
    return ids;
}

std::string serialize_json(const AdherenceReport& report) {
    ordered_json root;
    root["schema"] = "commentlint/1";

    ordered_json totals = counts_json(report.totals);
    totals["comments"] = report.comment_count;
    totals["files"] = report.file_count;
    root["totals"] = totals;
    root["overall_adherence"] = adherence_json(report.totals.adherence());

    if (report.project_distribution) {
        ordered_json distribution;
        distribution["followed"] = report.project_distribution->followed;
        distribution["violated"] = report.project_distribution->violated;
        distribution["not_applicable"] = report.project_distribution->not_applicable;
        root["project_distribution"] = distribution;
    } else {
        root["project_distribution"] = nullptr;
    }

    ordered_json per_category;
    for (const RuleCategory category : kCategories) {
        const auto it = report.per_category.find(category);
        per_category[to_string(category)] =
            counts_json(it == report.per_category.end() ? VerdictCounts{} : it->second);
    }
    root["per_category"] = per_category;

    ordered_json per_source;
    for (const auto& [name, counts] :
         {std::pair<const char*, const VerdictCounts&>{"standard", report.standard_counts},
          std::pair<const char*, const VerdictCounts&>{"project_specific",
                                                       report.project_counts}}) {
        ordered_json entry;
        entry["followed"] = counts.followed;
        entry["violated"] = counts.violated;
        entry["adherence"] = adherence_json(counts.adherence());
        per_source[name] = entry;
    }
    root["per_source"] = per_source;

    ordered_json per_rule = ordered_json::array();
    for (const std::string& id : presentation_rule_ids(report)) {
        const auto it = report.per_rule.find(id);
        const VerdictCounts counts = it == report.per_rule.end() ? VerdictCounts{} : it->second;
        ordered_json entry;
        entry["rule_id"] = id;
        entry["followed"] = counts.followed;
        entry["violated"] = counts.violated;
        entry["not_applicable"] = counts.not_applicable;
        entry["adherence"] = adherence_json(counts.adherence());
        per_rule.push_back(entry);
    }
    root["per_rule"] = per_rule;

    ordered_json per_comment = ordered_json::array();
    for (const PerCommentStats& row : report.per_comment) {
        ordered_json entry;
        entry["file"] = row.file;
        entry["line"] = row.line;
        entry["class"] = row.class_qualified_name;
        entry["followed"] = row.counts.followed;
        entry["violated"] = row.counts.violated;
        entry["not_applicable"] = row.counts.not_applicable;
        entry["adherence"] = adherence_json(row.counts.adherence());
        per_comment.push_back(entry);
    }
    root["per_comment"] = per_comment;

    ordered_json findings = ordered_json::array();
    for (const Finding& finding : report.findings) {
        ordered_json entry;
        entry["file"] = finding.file;
        entry["line"] = finding.line;
        entry["class"] = finding.class_qualified_name;
        entry["rule_id"] = finding.rule_id;
        entry["category"] = to_string(finding.category);
        entry["source"] = to_string(finding.source);
        entry["verdict"] = to_string(finding.verdict);
        entry["evidence"] = finding.evidence;
        findings.push_back(entry);
    }
    root["findings"] = findings;

    return root.dump(2) + "\n";
}

std::string serialize_text(const AdherenceReport& report) {
    std::ostringstream out;
    out << "comments: " << report.comment_count << "  files: " << report.file_count << '\n';
    out << "verdicts: " << report.totals.followed << " followed, " << report.totals.violated
        << " violated, " << report.totals.not_applicable << " not applicable\n";
    out << "overall adherence: " << format_adherence(report.totals.adherence()) << '\n';
    if (report.project_distribution) {
        out << "average comment: " << format_percent(report.project_distribution->followed)
            << " followed, " << format_percent(report.project_distribution->violated)
            << " violated, " << format_percent(report.project_distribution->not_applicable)
            << " not applicable\n";
    }

    out << "\nby category\n";
    for (const RuleCategory category : kCategories) {
        const auto it = report.per_category.find(category);
        const VerdictCounts counts =
            it == report.per_category.end() ? VerdictCounts{} : it->second;
        out << "  " << std::left << std::setw(14) << to_string(category) << std::right
            << std::setw(6) << counts.followed << std::setw(6) << counts.violated
            << std::setw(6) << counts.not_applicable << '\n';
    }

    out << "\nby source\n";
    out << "  standard          " << report.standard_counts.followed << " followed, "
        << report.standard_counts.violated << " violated, adherence "
        << format_adherence(report.standard_counts.adherence()) << '\n';
    out << "  project-specific  " << report.project_counts.followed << " followed, "
        << report.project_counts.violated << " violated, adherence "
        << format_adherence(report.project_counts.adherence()) << '\n';

    out << "\nby rule\n";
    for (const std::string& id : presentation_rule_ids(report)) {
        const auto it = report.per_rule.find(id);
        const VerdictCounts counts = it == report.per_rule.end() ? VerdictCounts{} : it->second;
        out << "  " << std::left << std::setw(14) << id << std::right << std::setw(6)
            << counts.followed << std::setw(6) << counts.violated << std::setw(6)
            << counts.not_applicable << '\n';
    }

    long violations = 0;
    for (const Finding& finding : report.findings) {
        if (finding.verdict == Verdict::Violated) ++violations;
    }
    if (violations > 0) {
        out << "\nviolations\n";
        for (const Finding& finding : report.findings) {
            if (finding.verdict != Verdict::Violated) continue;
            out << "  " << finding.file << ':' << finding.line << ' '
                << finding.class_qualified_name << ' ' << finding.rule_id << ": "
                << finding.evidence << '\n';
        }
    }
    return out.str();
}

}  // namespace

std::optional<double> VerdictCounts::adherence() const {
    const long applicable = followed + violated;
    if (applicable == 0) return std::nullopt;
    return static_cast<double>(followed) / static_cast<double>(applicable);
}

VerdictCounts& VerdictCounts::operator+=(const VerdictCounts& other) {
    followed += other.followed;
    violated += other.violated;
    not_applicable += other.not_applicable;
    return *this;
}

AdherenceReport aggregate(const std::vector<Finding>& findings,
                          const std::vector<Rule>& active_rules) {
    AdherenceReport report;
    for (const Rule& rule : active_rules) {
        report.rule_order.push_back(rule.id);
        report.per_rule[rule.id];  // keep zero rows
    }
    for (const RuleCategory category : kCategories) report.per_category[category];

    report.findings = findings;
    sort_findings(report.findings);

    std::map<CommentKey, VerdictCounts> grouped;
    for (const Finding& finding : report.findings) {
        VerdictCounts& counts =
            grouped[{finding.file, finding.line, finding.class_qualified_name}];
        switch (finding.verdict) {
            case Verdict::Followed: ++counts.followed; break;
            case Verdict::Violated: ++counts.violated; break;
            case Verdict::NotApplicable: ++counts.not_applicable; break;
        }
        tally(report, finding);
    }
    report.per_comment = to_rows(grouped);
    report.comment_count = static_cast<long>(report.per_comment.size());
    report.file_count = count_distinct_files(report.findings);
    report.project_distribution = compute_distribution(report.per_comment);
    return report;
}

AdherenceReport merge(const AdherenceReport& a, const AdherenceReport& b) {
    AdherenceReport merged;
    merged.rule_order = a.rule_order.empty() ? b.rule_order : a.rule_order;

    merged.findings = a.findings;
    merged.findings.insert(merged.findings.end(), b.findings.begin(), b.findings.end());
    sort_findings(merged.findings);

    std::map<CommentKey, VerdictCounts> grouped;
    for (const AdherenceReport* part : {&a, &b}) {
        for (const PerCommentStats& row : part->per_comment) {
            grouped[{row.file, row.line, row.class_qualified_name}] += row.counts;
        }
        for (const auto& [category, counts] : part->per_category) {
            merged.per_category[category] += counts;
        }
        for (const auto& [id, counts] : part->per_rule) merged.per_rule[id] += counts;
        merged.standard_counts += part->standard_counts;
        merged.project_counts += part->project_counts;
        merged.totals += part->totals;
    }
    for (const RuleCategory category : kCategories) merged.per_category[category];

    merged.per_comment = to_rows(grouped);
    merged.comment_count = static_cast<long>(merged.per_comment.size());
    merged.file_count = count_distinct_files(merged.findings);
    merged.project_distribution = compute_distribution(merged.per_comment);
    return merged;
}

std::optional<ReportFormat> report_format_from_string(std::string_view text) {
    if (text == "text") return ReportFormat::Text;
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    return std::nullopt;
}

std::string serialize(const AdherenceReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Text: return serialize_text(report);
        case ReportFormat::Json: return serialize_json(report);
        case ReportFormat::Csv: return serialize_csv(report);
    }
    return {};
}

}  // namespace commentlint
