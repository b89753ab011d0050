// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <string>
#include <vector>

#include "commentlint/source.hpp"

namespace commentlint {

/// One class-like declaration and the documentation comment attached to it
/// (or its recorded absence). This is the unit everything downstream works on.
///
/// Coverage: Java class/interface/enum declarations (annotation types are
/// reported as interfaces) and Python `class` statements. Classes without a
/// comment are emitted with comment_present=false so presence rules can fire.
struct ClassCommentRecord {
    std::string class_name;
    std::string qualified_name;        // dot-joined nesting path, e.g. "Outer.Inner"
    std::string file;                  // generic path string of the source unit
    int class_line = 0;                // 1-based line of the declaration keyword
    bool comment_present = false;
    std::string raw_comment;           // delimiters included; empty when absent
    int comment_start_line = 0;        // (0,0) sentinel when absent
    int comment_end_line = 0;
    std::string declaration_text;      // header text up to the body open, single-spaced
    std::vector<std::string> visible_member_names;  // sorted, deduplicated
    Language language = Language::Java;
};

/// A non-fatal problem found while scanning (unterminated comment/string, ...).
struct ExtractionDiagnostic {
    std::string file;
    int line = 0;
    std::string message;
};

struct ExtractionResult {
    std::vector<ClassCommentRecord> records;      // source order
    std::vector<ExtractionDiagnostic> diagnostics;
};

/// Scans a source unit and returns one record per class declaration, in
/// source order. The scanner is tolerant: it lexes strings and comments so
/// class-like keywords inside them are ignored, and it skips regions it
/// cannot make sense of with a diagnostic instead of failing.
///
/// Comment association:
///  - Java: the nearest `/** ... */` block preceding the declaration keyword,
///    separated only by whitespace, annotations, and modifiers. Any other
///    token (including a non-doc comment) breaks the association; a later
///    doc block replaces an earlier one.
///  - Python: the string literal standing as the first statement of the
///    class body, any quote style, r/u prefixes included.
///
/// Member visibility:
///  - Java: members carrying an explicit `public` modifier (constructors and
///    nested types excluded; implicit interface visibility is not inferred).
///  - Python: `def` names and class-level assignment targets that do not
///    start with an underscore.
ExtractionResult extract_class_comments(const SourceUnit& unit);

}  // namespace commentlint
