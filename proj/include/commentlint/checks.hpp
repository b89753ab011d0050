// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commentlint/comment.hpp"
#include "commentlint/extract.hpp"
#include "commentlint/rules.hpp"

namespace commentlint {

/// Three-way outcome per (comment, rule): the rule's precondition feature is
/// absent (NotApplicable), or it holds and the comment satisfies the rule
/// (Followed) or does not (Violated).
enum class Verdict { Followed, Violated, NotApplicable };

const char* to_string(Verdict verdict);

struct Finding {
    std::string rule_id;
    std::string class_qualified_name;
    std::string file;
    int line = 0;                          // 1-based line of the class declaration
    Verdict verdict = Verdict::NotApplicable;
    std::string evidence;                  // non-empty when Violated, <= 120 chars
    RuleCategory category = RuleCategory::Other;
    GuidelineSource source;

    bool operator==(const Finding&) const = default;
};

/// Evaluates one rule against one parsed comment. Pure; never fails.
/// NotApplicable when the applicability predicate is false, when the comment
/// is absent or malformed and the rule's predicates need it, or when the
/// rule names a predicate missing from the registry.
Finding evaluate_rule(const Rule& rule, const StructuredComment& comment,
                      const ClassCommentRecord& record);

/// Parses the record's comment for its language/dialect and evaluates every
/// rule whose language set covers the record. Exactly one finding per
/// in-scope rule, in catalog order.
std::vector<Finding> evaluate_comment(const std::vector<Rule>& rules,
                                      const ClassCommentRecord& record,
                                      std::optional<CommentDialect> dialect_hint = std::nullopt);

/// The parse evaluate_comment performs, exposed for tests and tooling:
/// Javadoc for Java records, quote-strip + dialect detection + parse for
/// Python, and an empty sentinel for absent comments.
StructuredComment parse_record_comment(const ClassCommentRecord& record,
                                       std::optional<CommentDialect> dialect_hint = std::nullopt);

}  // namespace commentlint
