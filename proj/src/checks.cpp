// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/checks.hpp"

#include "commentlint/predicates.hpp"

namespace commentlint {
namespace {

/// Evidence is capped for report readability; cuts land on a UTF-8 boundary.
std::string cap_evidence(std::string text) {
    constexpr std::size_t kMax = 120;
    if (text.size() <= kMax) return text;
    std::size_t cut = kMax;
    while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
    text.resize(cut);
    return text;
}

struct NamedPredicate {
    const Predicate* predicate = nullptr;
    bool negated = false;
    std::string base_name;
};

NamedPredicate lookup(const std::string& name) {
    std::string key = name;
    bool negated = false;
    if (!key.empty() && key[0] == '!') {
        negated = true;
        key.erase(0, 1);
    }
    const auto& registry = predicate_registry();
    const auto it = registry.find(key);
    if (it == registry.end()) return {};
    return {&it->second, negated, key};
}

}  // namespace

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Followed: return "followed";
        case Verdict::Violated: return "violated";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

Finding evaluate_rule(const Rule& rule, const StructuredComment& comment,
                      const ClassCommentRecord& record) {
    Finding finding;
    finding.rule_id = rule.id;
    finding.class_qualified_name = record.qualified_name;
    finding.file = record.file;
    finding.line = record.class_line;
    finding.category = rule.category;
    finding.source = rule.primary_source();
    finding.verdict = Verdict::NotApplicable;

    const NamedPredicate applicability = lookup(rule.applicability);
    const NamedPredicate followed = lookup(rule.followed);
    if (!applicability.predicate || !followed.predicate) return finding;

    // A rule only evaluates on an absent or malformed comment when both its
    // predicates can cope with one; otherwise the feature is unavailable.
    if (!record.comment_present && !(applicability.predicate->works_without_comment &&
                                     followed.predicate->works_without_comment)) {
        return finding;
    }
    if (comment.malformed && !(applicability.predicate->works_on_malformed &&
                               followed.predicate->works_on_malformed)) {
        return finding;
    }

    const EvalContext ctx{rule, comment, record};
    bool applicable = applicability.predicate->test(ctx);
    if (applicability.negated) applicable = !applicable;
    if (!applicable) return finding;

    bool holds = followed.predicate->test(ctx);
    if (followed.negated) holds = !holds;
    if (holds) {
        finding.verdict = Verdict::Followed;
    } else {
        finding.verdict = Verdict::Violated;
        // Under an inverted predicate the violation is the condition holding,
        // so the positive explain() text would describe the wrong direction.
        finding.evidence = followed.negated
            ? "prohibited condition '" + followed.base_name + "' holds"
            : cap_evidence(followed.predicate->explain(ctx));
        if (finding.evidence.empty()) finding.evidence = "rule not followed";
    }
    return finding;
}

StructuredComment parse_record_comment(const ClassCommentRecord& record,
                                       std::optional<CommentDialect> dialect_hint) {
    if (!record.comment_present) {
        StructuredComment absent;
        absent.dialect = record.language == Language::Java ? CommentDialect::Javadoc
                                                           : CommentDialect::Pep257;
        return absent;
    }
    if (record.language == Language::Java) {
        return parse_javadoc(record.raw_comment);
    }
    bool literal_ok = true;
    const std::string body = python_docstring_body(record.raw_comment, &literal_ok);
    const CommentDialect dialect = detect_python_dialect(body, dialect_hint);
    StructuredComment comment = parse_pydoc(body, dialect);
    if (!literal_ok) {
        comment.malformed = true;
        comment.diagnostics.push_back("unterminated or malformed string literal");
    }
    return comment;
}

std::vector<Finding> evaluate_comment(const std::vector<Rule>& rules,
                                      const ClassCommentRecord& record,
                                      std::optional<CommentDialect> dialect_hint) {
    const StructuredComment comment = parse_record_comment(record, dialect_hint);
    std::vector<Finding> findings;
    findings.reserve(rules.size());
    for (const Rule& rule : rules) {
        if (!rule.languages.contains(record.language)) continue;
        findings.push_back(evaluate_rule(rule, comment, record));
    }
    return findings;
}

}  // namespace commentlint
