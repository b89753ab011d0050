// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include <algorithm>
#include <array>
#include <cctype>
#include <string_view>

#include "commentlint/comment.hpp"
#include "comment_internal.hpp"

namespace commentlint {
namespace {

using detail::is_blank;
using detail::trim;

constexpr std::array<std::string_view, 14> kNumpySections = {
    "Parameters", "Returns",  "Yields",     "Receives",   "Raises",
    "Warns",      "Warnings", "See Also",   "Notes",      "References",
    "Examples",   "Attributes", "Methods",  "Other Parameters",
};

constexpr std::array<std::string_view, 17> kGoogleSections = {
    "Args",          "Arguments", "Attributes", "Example",  "Examples",
    "Keyword Args",  "Keyword Arguments",       "Methods",  "Note",
    "Notes",         "Raises",    "References", "Returns",  "Todo",
    "Warning",       "Warnings",  "Yields",
};

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

bool is_dash_underline(std::string_view trimmed) {
    if (trimmed.empty()) return false;
    return std::all_of(trimmed.begin(), trimmed.end(),
                       [](char c) { return c == '-'; });
}

const std::string_view* canonical_numpy_header(std::string_view name) {
    for (const auto& known : kNumpySections) {
        if (iequals(known, name)) return &known;
    }
    return nullptr;
}

/// A Google-style header is a known section name directly followed by ':'.
const std::string_view* google_header(std::string_view trimmed) {
    if (trimmed.empty() || trimmed.back() != ':') return nullptr;
    trimmed.remove_suffix(1);
    for (const auto& known : kGoogleSections) {
        if (iequals(known, trimmed)) return &known;
    }
    return nullptr;
}

std::size_t indent_width(std::string_view line) {
    std::size_t k = 0;
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    return k;
}

}  // namespace

std::string python_docstring_body(const std::string& raw_literal, bool* ok_out) {
    if (ok_out) *ok_out = true;
    std::size_t k = 0;
    while (k < raw_literal.size() && k < 2 &&
           (raw_literal[k] == 'r' || raw_literal[k] == 'R' ||
            raw_literal[k] == 'u' || raw_literal[k] == 'U')) {
        ++k;
    }
    if (k >= raw_literal.size() ||
        (raw_literal[k] != '"' && raw_literal[k] != '\'')) {
        if (ok_out) *ok_out = false;
        return raw_literal;
    }
    const char quote = raw_literal[k];
    std::size_t delim = 1;
    if (k + 2 < raw_literal.size() && raw_literal[k + 1] == quote &&
        raw_literal[k + 2] == quote) {
        delim = 3;
    }
    const std::size_t body_begin = k + delim;
    const bool terminated =
        raw_literal.size() >= body_begin + delim &&
        std::all_of(raw_literal.end() - static_cast<long>(delim), raw_literal.end(),
                    [quote](char c) { return c == quote; });
    if (!terminated) {
        if (ok_out) *ok_out = false;
        return raw_literal.substr(body_begin);
    }
    return raw_literal.substr(body_begin, raw_literal.size() - delim - body_begin);
}

CommentDialect detect_python_dialect(const std::string& raw_body,
                                     std::optional<CommentDialect> preset_hint) {
    if (preset_hint) return *preset_hint;
    const std::vector<std::string> lines = detail::split_lines(raw_body);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (!is_dash_underline(trim(lines[i]))) continue;
        if (canonical_numpy_header(trim(lines[i - 1]))) {
            return CommentDialect::Numpydoc;
        }
    }
    static constexpr std::array<std::string_view, 6> kGoogleSignals = {
        "Args:", "Returns:", "Attributes:", "Raises:", "Examples:", "Notes:",
    };
    for (const auto& line : lines) {
        const std::string t = trim(line);
        for (const auto& signal : kGoogleSignals) {
            if (t == signal) return CommentDialect::GoogleDoc;
        }
    }
    return CommentDialect::Pep257;
}

StructuredComment parse_pydoc(const std::string& raw_body, CommentDialect dialect) {
    StructuredComment out;
    out.dialect = dialect;
    out.stripped_text = raw_body;
    out.raw_lines = detail::split_lines(raw_body);
    out.line_count = static_cast<int>(out.raw_lines.size());

    // Shared margin of the continuation lines, as in the usual docstring
    // trim: the smallest indent over non-blank lines after the first.
    std::size_t margin = std::string::npos;
    for (std::size_t idx = 1; idx < out.raw_lines.size(); ++idx) {
        if (is_blank(out.raw_lines[idx])) continue;
        margin = std::min(margin, indent_width(out.raw_lines[idx]));
    }
    if (margin == std::string::npos) margin = 0;

    struct LineInfo {
        std::size_t line_begin = 0;
        std::size_t content_begin = 0;
        std::size_t line_end = 0;
        bool has_newline = false;
        bool blank = false;
    };
    std::vector<LineInfo> infos;
    infos.reserve(out.raw_lines.size());
    std::vector<std::string> content;  // dedented lines
    std::size_t offset = 0;
    for (std::size_t idx = 0; idx < out.raw_lines.size(); ++idx) {
        const std::string& line = out.raw_lines[idx];
        LineInfo info;
        info.line_begin = offset;
        info.line_end = offset + line.size();
        info.has_newline = idx + 1 < out.raw_lines.size();
        std::size_t cut = 0;
        if (idx > 0) cut = std::min(margin, indent_width(line));
        info.content_begin = info.line_begin + cut;
        info.blank = is_blank(line);
        infos.push_back(info);
        content.push_back(line.substr(cut));
        offset = info.line_end + (info.has_newline ? 1 : 0);
    }

    // Section headers. Numpydoc: any line underlined with dashes; GoogleDoc:
    // a known header name ending in ':'. Lines before the first header form
    // the description.
    struct Header {
        std::size_t line;       // header line index
        std::size_t body_from;  // first body line index
        std::string name;
    };
    std::vector<Header> headers;
    if (dialect == CommentDialect::Numpydoc) {
        for (std::size_t i = 1; i < content.size(); ++i) {
            if (!is_dash_underline(trim(content[i]))) continue;
            const std::string above = trim(content[i - 1]);
            if (above.empty() ||
                (!headers.empty() && headers.back().body_from > i - 1)) {
                out.diagnostics.push_back("section underline without header");
                continue;
            }
            Header h;
            h.line = i - 1;
            h.body_from = i + 1;
            const std::string_view* known = canonical_numpy_header(above);
            h.name = known ? std::string(*known) : above;
            headers.push_back(std::move(h));
        }
    } else if (dialect == CommentDialect::GoogleDoc) {
        for (std::size_t i = 0; i < content.size(); ++i) {
            const std::string_view* known = google_header(trim(content[i]));
            if (!known) continue;
            headers.push_back({i, i + 1, std::string(*known)});
        }
    }

    const std::size_t desc_end = headers.empty() ? content.size() : headers[0].line;
    for (std::size_t h = 0; h < headers.size(); ++h) {
        const std::size_t until =
            h + 1 < headers.size() ? headers[h + 1].line : content.size();
        std::string body;
        for (std::size_t i = headers[h].body_from; i < until; ++i) {
            if (!body.empty()) body.push_back('\n');
            body += content[i];
        }
        Section section;
        section.name = headers[h].name;
        section.body = trim(body);
        section.line = static_cast<int>(headers[h].line);
        out.sections.push_back(std::move(section));
    }

    // Description text with a map back to body offsets.
    std::string desc;
    std::vector<std::pair<std::size_t, std::size_t>> desc_map;
    for (std::size_t idx = 0; idx < desc_end; ++idx) {
        if (idx > 0) desc.push_back('\n');
        desc_map.emplace_back(desc.size(), infos[idx].content_begin);
        desc += content[idx];
    }

    // Summary is the leading non-blank line group, cut at the first
    // sentence end inside that group.
    std::size_t group_begin = 0;
    while (group_begin < desc_end && infos[group_begin].blank) ++group_begin;
    std::size_t group_end = group_begin;
    while (group_end < desc_end && !infos[group_end].blank) ++group_end;
    std::string group_text;
    for (std::size_t idx = group_begin; idx < group_end; ++idx) {
        if (idx > group_begin) group_text.push_back('\n');
        group_text += content[idx];
    }
    const std::size_t se = find_sentence_end(group_text);
    std::string rest_of_group;
    std::size_t summary_end_desc = desc.size();
    if (se != std::string::npos) {
        out.summary = trim(std::string_view(group_text).substr(0, se));
        rest_of_group = trim(std::string_view(group_text).substr(se));
    } else {
        out.summary = trim(group_text);
    }
    if (group_begin < desc_end) {
        const std::size_t group_desc_off = desc_map[group_begin].first;
        summary_end_desc =
            group_desc_off + (se != std::string::npos ? se : group_text.size());
    }
    out.first_word = detail::compute_first_word(out.summary);

    std::string extended = rest_of_group;
    for (std::size_t idx = group_end; idx < desc_end; ++idx) {
        if (!extended.empty()) extended.push_back('\n');
        extended += content[idx];
    }
    out.extended = trim(extended);

    out.blank_line_after_summary = !out.extended.empty() && rest_of_group.empty() &&
                                   group_end < desc_end && infos[group_end].blank;

    // Paragraphs of the description, split on blank lines.
    std::vector<std::string> cur_lines;
    auto end_paragraph = [&]() {
        std::string joined;
        for (std::size_t i = 0; i < cur_lines.size(); ++i) {
            if (i > 0) joined.push_back('\n');
            joined += cur_lines[i];
        }
        joined = trim(joined);
        if (!joined.empty()) {
            if (!out.paragraphs.empty()) {
                out.paragraph_breaks.push_back(ParagraphBreak::BlankLine);
            }
            out.paragraphs.push_back(std::move(joined));
        }
        cur_lines.clear();
    };
    for (std::size_t idx = 0; idx < desc_end; ++idx) {
        if (infos[idx].blank) {
            end_paragraph();
        } else {
            cur_lines.push_back(content[idx]);
        }
    }
    end_paragraph();

    std::string content_text;
    for (std::size_t idx = 0; idx < content.size(); ++idx) {
        if (idx > 0) content_text.push_back('\n');
        content_text += content[idx];
    }
    detail::scan_html_markers(content_text, out.html_markers);
    detail::scan_inline_tags(content_text, out.inline_tags);

    // Global offset where the summary region ends.
    std::size_t summary_end_global = 0;
    for (std::size_t k = 0; k < desc_map.size(); ++k) {
        const auto [doff, goff] = desc_map[k];
        const std::size_t line_len = infos[k].line_end - infos[k].content_begin;
        if (summary_end_desc >= doff && summary_end_desc <= doff + line_len) {
            summary_end_global = goff + (summary_end_desc - doff);
        }
    }

    // Section membership per line, for span attribution.
    std::vector<bool> in_section(content.size(), false);
    for (std::size_t h = 0; h < headers.size(); ++h) {
        const std::size_t until =
            h + 1 < headers.size() ? headers[h + 1].line : content.size();
        for (std::size_t i = headers[h].line; i < until; ++i) in_section[i] = true;
    }

    for (std::size_t idx = 0; idx < infos.size(); ++idx) {
        const LineInfo& info = infos[idx];
        const std::size_t region_end = info.line_end + (info.has_newline ? 1 : 0);
        if (info.content_begin > info.line_begin) {
            out.spans.push_back({SpanKind::Gutter, info.line_begin, info.content_begin});
        }
        if (info.content_begin >= region_end) continue;
        SpanKind kind;
        if (info.blank) {
            kind = SpanKind::Blank;
        } else if (in_section[idx]) {
            kind = SpanKind::Section;
        } else if (idx >= desc_end) {
            kind = SpanKind::Extended;
        } else if (info.line_end <= summary_end_global || desc_map.empty()) {
            kind = SpanKind::Summary;
        } else if (info.content_begin >= summary_end_global) {
            kind = SpanKind::Extended;
        } else {
            out.spans.push_back({SpanKind::Summary, info.content_begin, summary_end_global});
            out.spans.push_back({SpanKind::Extended, summary_end_global, region_end});
            continue;
        }
        out.spans.push_back({kind, info.content_begin, region_end});
    }
    detail::merge_adjacent_spans(out.spans);

    return out;
}

}  // namespace commentlint
