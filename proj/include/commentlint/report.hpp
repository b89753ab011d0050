// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commentlint/checks.hpp"
#include "commentlint/rules.hpp"

namespace commentlint {

struct VerdictCounts {
    long followed = 0;
    long violated = 0;
    long not_applicable = 0;

    long total() const { return followed + violated + not_applicable; }
    /// followed / (followed + violated); nullopt when nothing was applicable.
    std::optional<double> adherence() const;
    VerdictCounts& operator+=(const VerdictCounts& other);
    bool operator==(const VerdictCounts&) const = default;
};

struct PerCommentStats {
    std::string file;
    int line = 0;
    std::string class_qualified_name;
    VerdictCounts counts;

    bool operator==(const PerCommentStats&) const = default;
};

/// Mean per-comment fractions of rules followed / violated / not applicable.
/// The three components sum to 1 whenever any comment contributed.
struct Distribution {
    double followed = 0.0;
    double violated = 0.0;
    double not_applicable = 0.0;

    bool operator==(const Distribution&) const = default;
};

struct AdherenceReport {
    std::vector<PerCommentStats> per_comment;             // sorted by (file, line, class)
    std::map<RuleCategory, VerdictCounts> per_category;   // all six categories present
    std::map<std::string, VerdictCounts> per_rule;        // every active rule, zero rows kept
    std::vector<std::string> rule_order;                  // catalog order for serialization
    VerdictCounts standard_counts;                        // rules from standard guidelines
    VerdictCounts project_counts;                         // project-specific rules
    std::optional<Distribution> project_distribution;     // nullopt when no comment contributed
    VerdictCounts totals;
    long comment_count = 0;
    long file_count = 0;                                  // distinct files among findings
    std::vector<Finding> findings;                        // sorted by (file, line, rule_id)

    bool operator==(const AdherenceReport&) const = default;
};

/// Folds findings produced under one rule set into a report. `active_rules`
/// supplies the per-rule table skeleton and the ordering; empty findings
/// yield an empty report with zeroed totals.
AdherenceReport aggregate(const std::vector<Finding>& findings,
                          const std::vector<Rule>& active_rules);

/// Associative, commutative merge of two partial reports over the same rule
/// set. Per-comment rows with the same key are combined and every derived
/// figure is recomputed, so merge(aggregate(A), aggregate(B)) equals
/// aggregate(A ++ B) field for field.
AdherenceReport merge(const AdherenceReport& a, const AdherenceReport& b);

enum class ReportFormat { Text, Json, Csv };

std::optional<ReportFormat> report_format_from_string(std::string_view text);

/// Deterministic serialization. JSON carries schema version "commentlint/1"
/// with stable key order; CSV is one row per finding under the header
/// `file,line,class,rule_id,category,source,verdict,evidence`; text is a
/// human-readable table of the same aggregates.
std::string serialize(const AdherenceReport& report, ReportFormat format);

}  // namespace commentlint
