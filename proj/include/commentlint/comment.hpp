// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace commentlint {

enum class CommentDialect { Javadoc, Pep257, Numpydoc, GoogleDoc };

const char* to_string(CommentDialect dialect);

struct BlockTag {
    std::string name;   // without the leading '@'
    std::string body;   // trimmed, continuation lines joined with '\n'
    int line = 0;       // 0-based line within the delimiter-stripped text
};

struct InlineTag {
    std::string name;   // e.g. "code", "link"
    std::string body;
};

struct Section {
    std::string name;   // canonical capitalization for known headers, verbatim otherwise
    std::string body;
    int line = 0;       // 0-based line of the header within the body text
};

enum class SpanKind { Gutter, Summary, Extended, Tag, Section, Blank };

/// Attribution of one slice of the delimiter-stripped text. The parser
/// assigns every character to exactly one kind; spans are ordered and
/// contiguous, so concatenating them reproduces the stripped text.
struct AttributedSpan {
    SpanKind kind;
    std::size_t begin = 0;  // offsets into StructuredComment::stripped_text
    std::size_t end = 0;
};

enum class ParagraphBreak { BlankLine, HtmlTag };

/// Dialect-aware parse of one raw documentation comment.
struct StructuredComment {
    CommentDialect dialect = CommentDialect::Javadoc;
    std::string summary;
    std::string extended;
    bool blank_line_after_summary = false;
    std::vector<std::string> paragraphs;              // description split on blank lines / <p>
    std::vector<ParagraphBreak> paragraph_breaks;     // size == paragraphs.size() - 1
    std::vector<BlockTag> block_tags;                 // Javadoc only, source order
    std::vector<InlineTag> inline_tags;               // {@...} forms
    std::vector<Section> sections;                    // Numpydoc/GoogleDoc only, source order
    std::map<std::string, int> html_markers;          // lowercase tag name -> occurrence count
    std::string first_word;                           // first summary token, trailing punctuation stripped
    int line_count = 0;                               // physical lines of the raw comment
    std::vector<std::string> raw_lines;               // delimiter-stripped lines, gutters kept
    std::string stripped_text;                        // delimiter-stripped text, joined
    std::vector<AttributedSpan> spans;                // covers stripped_text
    bool malformed = false;                           // delimiter damage; most rules go NotApplicable
    std::vector<std::string> diagnostics;

    const BlockTag* find_tag(std::string_view name) const;
    const Section* find_section(std::string_view name) const;
};

/// Parses a Javadoc block (`/** ... */`, delimiters included). An
/// unterminated or missing delimiter marks the result malformed and adds a
/// diagnostic; the text is still parsed best-effort.
StructuredComment parse_javadoc(const std::string& raw);

/// Strips quotes and any r/u prefix from a Python string literal. Returns
/// the literal unchanged (and sets *ok_out=false when given) if it is not a
/// recognizable string literal.
std::string python_docstring_body(const std::string& raw_literal, bool* ok_out = nullptr);

/// Dialect detection on a docstring body: a dash underline below a known
/// section header wins Numpydoc, a known `Header:` line wins GoogleDoc,
/// anything else is Pep257. A hint always wins.
CommentDialect detect_python_dialect(const std::string& raw_body,
                                     std::optional<CommentDialect> preset_hint = std::nullopt);

/// Parses a docstring body under the given dialect.
StructuredComment parse_pydoc(const std::string& raw_body, CommentDialect dialect);

/// Sentence boundary used for summaries: first '.' followed by whitespace or
/// end of text, skipping the abbreviations e.g., i.e., etc., vs. and periods
/// inside inline-tag braces. Returns the offset one past the period, or npos.
std::size_t find_sentence_end(std::string_view text);

}  // namespace commentlint
