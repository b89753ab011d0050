// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commentlint/checks.hpp"
#include "commentlint/comment.hpp"
#include "commentlint/extract.hpp"
#include "commentlint/rules.hpp"
#include "commentlint/source.hpp"

using namespace commentlint;

namespace {

const std::string kCorpusDir = std::string(COMMENTLINT_FIXTURE_DIR) + "/corpus";

struct LabelRow {
    std::string preset;
    std::string file;
    std::string qualified_name;
    std::set<std::string> followed;
    std::set<std::string> violated;
    int line = 0;
};

std::set<std::string> parse_id_list(const std::string& field) {
    std::set<std::string> ids;
    if (field == "-") return ids;
    std::istringstream stream(field);
    std::string id;
    while (std::getline(stream, id, ',')) ids.insert(id);
    return ids;
}

std::vector<LabelRow> load_labels() {
    std::ifstream in(kCorpusDir + "/labels.tsv");
    REQUIRE(in.good());
    std::vector<LabelRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t from = 0;
        while (true) {
            const std::size_t tab = line.find('\t', from);
            fields.push_back(line.substr(from, tab == std::string::npos ? tab : tab - from));
            if (tab == std::string::npos) break;
            from = tab + 1;
        }
        REQUIRE_MESSAGE(fields.size() == 5, "labels.tsv line " << line_no);
        rows.push_back({fields[0], fields[1], fields[2], parse_id_list(fields[3]),
                        parse_id_list(fields[4]), line_no});
    }
    return rows;
}

ClassCommentRecord make_record(Language language, std::string raw_comment,
                               std::string declaration_text = "",
                               std::vector<std::string> members = {}) {
    ClassCommentRecord record;
    record.class_name = "Widget";
    record.qualified_name = "Widget";
    record.file = language == Language::Java ? "mem/Widget.java" : "mem/widget.py";
    record.class_line = 10;
    record.comment_present = !raw_comment.empty();
    record.raw_comment = std::move(raw_comment);
    record.comment_start_line = record.comment_present ? 7 : 0;
    record.comment_end_line = record.comment_present ? 9 : 0;
    record.declaration_text =
        declaration_text.empty() ? std::string("class Widget") : std::move(declaration_text);
    record.visible_member_names = std::move(members);
    record.language = language;
    return record;
}

const Rule& builtin_rule(const std::string& id) {
    for (const Rule& rule : builtin_rules()) {
        if (rule.id == id) return rule;
    }
    REQUIRE_MESSAGE(false, "no builtin rule " << id);
    static Rule missing;
    return missing;
}

Verdict run_rule(const std::string& id, const ClassCommentRecord& record) {
    const Rule& rule = builtin_rule(id);
    return evaluate_rule(rule, parse_record_comment(record), record).verdict;
}

const Finding& finding_for(const std::vector<Finding>& findings, const std::string& id) {
    for (const Finding& finding : findings) {
        if (finding.rule_id == id) return finding;
    }
    REQUIRE_MESSAGE(false, "no finding for " << id);
    static Finding missing;
    return missing;
}

}  // namespace

TEST_CASE("corpus files match the hand-derived verdict table") {
    const std::vector<LabelRow> rows = load_labels();
    REQUIRE(rows.size() == 40);

    int java_rows = 0;
    int python_rows = 0;

    // Decode + extract each corpus file once; rules resolve once per preset.
    std::map<std::string, ExtractionResult> extracted;
    std::map<std::string, std::vector<Rule>> rules_by_preset;

    for (const LabelRow& row : rows) {
        CAPTURE(row.line);
        CAPTURE(row.preset);
        CAPTURE(row.qualified_name);

        auto rules_it = rules_by_preset.find(row.preset);
        if (rules_it == rules_by_preset.end()) {
            const Preset preset = resolve_preset(row.preset);
            rules_it = rules_by_preset.emplace(row.preset, resolve_rules(preset, builtin_rules()))
                           .first;
        }
        const std::vector<Rule>& rules = rules_it->second;

        auto file_it = extracted.find(row.file);
        if (file_it == extracted.end()) {
            DecodeResult decoded = decode_source(kCorpusDir + "/" + row.file);
            REQUIRE(std::holds_alternative<SourceUnit>(decoded));
            file_it = extracted
                          .emplace(row.file,
                                   extract_class_comments(std::get<SourceUnit>(decoded)))
                          .first;
        }

        const ClassCommentRecord* record = nullptr;
        for (const ClassCommentRecord& candidate : file_it->second.records) {
            if (candidate.qualified_name == row.qualified_name) record = &candidate;
        }
        REQUIRE_MESSAGE(record != nullptr, "class not extracted: " << row.qualified_name);
        (record->language == Language::Java ? java_rows : python_rows) += 1;

        const std::vector<Finding> findings = evaluate_comment(rules, *record);
        CHECK(findings.size() == rules.size());

        std::set<std::string> seen;
        for (const Finding& finding : findings) {
            CAPTURE(finding.rule_id);
            seen.insert(finding.rule_id);
            const Verdict expected = row.followed.count(finding.rule_id)
                                         ? Verdict::Followed
                                         : row.violated.count(finding.rule_id)
                                               ? Verdict::Violated
                                               : Verdict::NotApplicable;
            CHECK(finding.verdict == expected);
            if (finding.verdict == Verdict::Violated) {
                CHECK(!finding.evidence.empty());
                CHECK(finding.evidence.size() <= 120);
            } else {
                CHECK(finding.evidence.empty());
            }
            CHECK(finding.class_qualified_name == row.qualified_name);
            CHECK(finding.line == record->class_line);
        }
        // Every id the table names must actually be in scope for the preset.
        for (const std::string& id : row.followed) CHECK_MESSAGE(seen.count(id), id);
        for (const std::string& id : row.violated) CHECK_MESSAGE(seen.count(id), id);
    }

    CHECK(java_rows >= 20);
    CHECK(python_rows >= 20);
}

TEST_CASE("absent comment fires only the presence rule") {
    const ClassCommentRecord java = make_record(Language::Java, "");
    const std::vector<Rule> oracle = resolve_rules(resolve_preset("eclipse"), builtin_rules());
    const std::vector<Finding> findings = evaluate_comment(oracle, java);
    REQUIRE(findings.size() == oracle.size());
    for (const Finding& finding : findings) {
        CAPTURE(finding.rule_id);
        if (finding.rule_id == "CNT-PRESENT") {
            CHECK(finding.verdict == Verdict::Violated);
            CHECK(!finding.evidence.empty());
        } else {
            CHECK(finding.verdict == Verdict::NotApplicable);
        }
    }

    const ClassCommentRecord python = make_record(Language::Python, "");
    const std::vector<Rule> ipython = resolve_rules(resolve_preset("ipython"), builtin_rules());
    for (const Finding& finding : evaluate_comment(ipython, python)) {
        CHECK(finding.verdict == (finding.rule_id == "CNT-PRESENT" ? Verdict::Violated
                                                                   : Verdict::NotApplicable));
    }
}

TEST_CASE("malformed comment counts as present but gates feature rules") {
    const std::vector<Rule> oracle = resolve_rules(resolve_preset("eclipse"), builtin_rules());
    const ClassCommentRecord java = make_record(Language::Java, "/** Unfinished story");
    REQUIRE(parse_record_comment(java).malformed);
    for (const Finding& finding : evaluate_comment(oracle, java)) {
        CAPTURE(finding.rule_id);
        CHECK(finding.verdict == (finding.rule_id == "CNT-PRESENT" ? Verdict::Followed
                                                                   : Verdict::NotApplicable));
    }

    const ClassCommentRecord python = make_record(Language::Python, "\"\"\"Broken tale");
    REQUIRE(parse_record_comment(python).malformed);
    const std::vector<Rule> ipython = resolve_rules(resolve_preset("ipython"), builtin_rules());
    for (const Finding& finding : evaluate_comment(ipython, python)) {
        CHECK(finding.verdict == (finding.rule_id == "CNT-PRESENT" ? Verdict::Followed
                                                                   : Verdict::NotApplicable));
    }
}

TEST_CASE("mood rule follows descriptive summaries and flags prescriptive ones") {
    CHECK(run_rule("ORA-3P", make_record(Language::Java, "/** Gets the current value. */")) ==
          Verdict::Followed);

    const ClassCommentRecord prescriptive =
        make_record(Language::Java, "/** Get the current value. */");
    const Finding finding =
        evaluate_rule(builtin_rule("ORA-3P"), parse_record_comment(prescriptive), prescriptive);
    CHECK(finding.verdict == Verdict::Violated);
    CHECK(finding.evidence.find("Get") != std::string::npos);

    // First word outside the verb lexicon: mood undetermined, rule stands off.
    CHECK(run_rule("ORA-3P", make_record(Language::Java, "/** Tombstone for old runs. */")) ==
          Verdict::NotApplicable);
}

TEST_CASE("summary separator rule wants a blank line before the extended description") {
    CHECK(run_rule("NUM-BLANK", make_record(Language::Python,
                                            "\"\"\"Short.\n\nExtended.\n\"\"\"")) ==
          Verdict::Followed);
    CHECK(run_rule("NUM-BLANK", make_record(Language::Python,
                                            "\"\"\"Short.\nExtended.\n\"\"\"")) ==
          Verdict::Violated);
    CHECK(run_rule("NUM-BLANK", make_record(Language::Python, "\"\"\"Short.\"\"\"")) ==
          Verdict::NotApplicable);
}

TEST_CASE("author prohibition flags the tag and only the tag") {
    const std::string with_author =
        "/**\n"
        " * Reads blocks.\n"
        " *\n"
        " * @author Ada\n"
        " */\n"
        "public class Reader {}\n";
    const SourceUnit unit = make_source_unit("mem/Reader.java", Language::Java, with_author);
    const ExtractionResult result = extract_class_comments(unit);
    REQUIRE(result.records.size() == 1);

    const std::vector<Rule> hadoop = resolve_rules(resolve_preset("hadoop"), builtin_rules());
    const std::vector<Finding> findings = evaluate_comment(hadoop, result.records[0]);
    int violated = 0;
    for (const Finding& finding : findings) {
        if (finding.verdict == Verdict::Violated) {
            ++violated;
            CHECK(finding.rule_id == "HAD-AUTH");
            CHECK(finding.evidence.find("Ada") != std::string::npos);
        }
    }
    CHECK(violated == 1);

    const std::string without_author =
        "/**\n"
        " * Reads blocks.\n"
        " */\n"
        "public class Reader {}\n";
    const ExtractionResult clean =
        extract_class_comments(make_source_unit("mem/Reader.java", Language::Java, without_author));
    REQUIRE(clean.records.size() == 1);
    const std::vector<Finding> clean_findings = evaluate_comment(hadoop, clean.records[0]);
    CHECK(finding_for(clean_findings, "HAD-AUTH").verdict == Verdict::Followed);
    for (const Finding& finding : clean_findings) CHECK(finding.verdict != Verdict::Violated);
}

TEST_CASE("deleting the trigger feature moves the verdict off violated, never onto it") {
    // Deprecation tag without a replacement pointer.
    CHECK(run_rule("ORA-DEPR", make_record(Language::Java,
                                           "/**\n * Does things.\n * @deprecated\n */")) ==
          Verdict::Violated);
    CHECK(run_rule("ORA-DEPR", make_record(Language::Java, "/**\n * Does things.\n */")) ==
          Verdict::NotApplicable);

    // Serializable class without an @serial tag.
    CHECK(run_rule("ORA-SERIAL",
                   make_record(Language::Java, "/** Caches rows. */",
                               "public class Widget implements Serializable")) ==
          Verdict::Violated);
    CHECK(run_rule("ORA-SERIAL", make_record(Language::Java, "/** Caches rows. */")) ==
          Verdict::NotApplicable);

    // Bogus marker that is not FIXME.
    CHECK(run_rule("ORA-FIXME", make_record(Language::Java, "/** Still XXX here. */")) ==
          Verdict::Violated);
    CHECK(run_rule("ORA-FIXME", make_record(Language::Java, "/** Still open here. */")) ==
          Verdict::NotApplicable);

    // Block tags out of canonical order; with one tag gone there is no order.
    CHECK(run_rule("JD-ORDER",
                   make_record(Language::Java,
                               "/**\n * Maps keys.\n * @return id\n * @param k key\n */")) ==
          Verdict::Violated);
    CHECK(run_rule("JD-ORDER",
                   make_record(Language::Java, "/**\n * Maps keys.\n * @param k key\n */")) ==
          Verdict::NotApplicable);
}

TEST_CASE("inverting a rule to a prohibition swaps followed and violated only") {
    Rule inverted = builtin_rule("ORA-SERIAL");
    inverted.followed = "!" + inverted.followed;

    const ClassCommentRecord tagged =
        make_record(Language::Java, "/**\n * Caches rows.\n * @serial cache\n */",
                    "public class Widget implements Serializable");
    const ClassCommentRecord untagged =
        make_record(Language::Java, "/** Caches rows. */",
                    "public class Widget implements Serializable");
    const ClassCommentRecord out_of_scope = make_record(Language::Java, "/** Caches rows. */");

    CHECK(run_rule("ORA-SERIAL", tagged) == Verdict::Followed);
    const Finding flagged =
        evaluate_rule(inverted, parse_record_comment(tagged), tagged);
    CHECK(flagged.verdict == Verdict::Violated);
    CHECK(flagged.evidence == "prohibited condition 'has_serial_tag' holds");

    CHECK(run_rule("ORA-SERIAL", untagged) == Verdict::Violated);
    CHECK(evaluate_rule(inverted, parse_record_comment(untagged), untagged).verdict ==
          Verdict::Followed);

    CHECK(run_rule("ORA-SERIAL", out_of_scope) == Verdict::NotApplicable);
    CHECK(evaluate_rule(inverted, parse_record_comment(out_of_scope), out_of_scope).verdict ==
          Verdict::NotApplicable);
}

TEST_CASE("unknown predicate names yield not applicable") {
    Rule rule = builtin_rule("CNT-PRESENT");
    rule.followed = "no_such_predicate";
    const ClassCommentRecord record = make_record(Language::Java, "/** Fine. */");
    CHECK(evaluate_rule(rule, parse_record_comment(record), record).verdict ==
          Verdict::NotApplicable);

    rule = builtin_rule("CNT-PRESENT");
    rule.applicability = "also_missing";
    CHECK(evaluate_rule(rule, parse_record_comment(record), record).verdict ==
          Verdict::NotApplicable);
}

TEST_CASE("evaluate_comment keeps catalog order and filters by language") {
    const ClassCommentRecord java = make_record(Language::Java, "/** Holds state. */");
    const std::vector<Finding> java_findings = evaluate_comment(builtin_rules(), java);
    CHECK(java_findings.size() == 12);

    std::vector<std::string> expected_ids;
    for (const Rule& rule : builtin_rules()) {
        if (rule.languages.contains(Language::Java)) expected_ids.push_back(rule.id);
    }
    std::vector<std::string> actual_ids;
    for (const Finding& finding : java_findings) actual_ids.push_back(finding.rule_id);
    CHECK(actual_ids == expected_ids);

    const ClassCommentRecord python = make_record(Language::Python, "\"\"\"Holds state.\"\"\"");
    CHECK(evaluate_comment(builtin_rules(), python).size() == 8);
}

TEST_CASE("line length limit honors the configured parameter") {
    const std::string long_line(90, 'x');
    const ClassCommentRecord record =
        make_record(Language::Java, "/** " + long_line + " */");

    Rule rule = builtin_rule("FMT-LINELEN");
    const Finding at80 = evaluate_rule(rule, parse_record_comment(record), record);
    CHECK(at80.verdict == Verdict::Violated);
    CHECK(at80.evidence.find("97") != std::string::npos);  // 90 + delimiters and spaces

    rule.params["max_line_length"] = "100";
    CHECK(evaluate_rule(rule, parse_record_comment(record), record).verdict ==
          Verdict::Followed);
}
