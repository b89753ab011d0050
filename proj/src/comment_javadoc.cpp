// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include <cctype>
#include <optional>

#include "commentlint/comment.hpp"
#include "comment_internal.hpp"

namespace commentlint {
namespace {

using detail::is_blank;
using detail::trim;

struct LineInfo {
    std::size_t line_begin = 0;    // offsets into the stripped text
    std::size_t content_begin = 0;
    std::size_t line_end = 0;      // excludes the newline
    bool has_newline = false;
    bool blank = false;
    bool tag_line = false;

    std::string_view content(const std::string& text) const {
        return std::string_view(text).substr(content_begin, line_end - content_begin);
    }
};

/// Gutter = leading blanks, a run of '*', and one following space. The first
/// line (text after "/**") only sheds a single leading space so deliberate
/// indentation survives.
std::size_t content_offset(std::string_view line, bool first_line) {
    std::size_t k = 0;
    if (first_line) {
        if (!line.empty() && line[0] == ' ') k = 1;
        return k;
    }
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    if (k < line.size() && line[k] == '*') {
        while (k < line.size() && line[k] == '*') ++k;
        if (k < line.size() && line[k] == ' ') ++k;
        return k;
    }
    return k;
}

bool looks_like_tag(std::string_view content) {
    std::size_t k = 0;
    while (k < content.size() &&
           std::isspace(static_cast<unsigned char>(content[k]))) {
        ++k;
    }
    return k + 1 < content.size() && content[k] == '@' &&
           std::isalpha(static_cast<unsigned char>(content[k + 1]));
}

}  // namespace

StructuredComment parse_javadoc(const std::string& raw) {
    StructuredComment out;
    out.dialect = CommentDialect::Javadoc;
    out.line_count = 1;
    for (char c : raw) {
        if (c == '\n') ++out.line_count;
    }

    std::string body = raw;
    if (body.rfind("/**", 0) == 0) {
        body.erase(0, 3);
    } else {
        out.malformed = true;
        out.diagnostics.push_back("missing opening doc delimiter");
    }
    if (body.size() >= 2 && body.compare(body.size() - 2, 2, "*/") == 0) {
        body.resize(body.size() - 2);
    } else {
        out.malformed = true;
        out.diagnostics.push_back("unterminated comment");
    }
    out.stripped_text = body;
    out.raw_lines = detail::split_lines(body);

    std::vector<LineInfo> infos;
    infos.reserve(out.raw_lines.size());
    std::size_t offset = 0;
    for (std::size_t idx = 0; idx < out.raw_lines.size(); ++idx) {
        const std::string& line = out.raw_lines[idx];
        LineInfo info;
        info.line_begin = offset;
        info.line_end = offset + line.size();
        info.has_newline = idx + 1 < out.raw_lines.size();
        info.content_begin = info.line_begin + content_offset(line, idx == 0);
        info.blank = is_blank(std::string(info.content(body)));
        info.tag_line = !info.blank && looks_like_tag(info.content(body));
        infos.push_back(info);
        offset = info.line_end + (info.has_newline ? 1 : 0);
    }

    std::size_t first_tag_line = infos.size();
    for (std::size_t idx = 0; idx < infos.size(); ++idx) {
        if (infos[idx].tag_line) {
            first_tag_line = idx;
            break;
        }
    }

    // Description text with a map back to stripped-text offsets.
    std::string desc;
    std::vector<std::pair<std::size_t, std::size_t>> desc_map;  // desc off -> global off
    for (std::size_t idx = 0; idx < first_tag_line; ++idx) {
        if (idx > 0) desc.push_back('\n');
        desc_map.emplace_back(desc.size(), infos[idx].content_begin);
        desc += infos[idx].content(body);
    }

    // Block tags: body continues over following non-tag lines.
    for (std::size_t idx = first_tag_line; idx < infos.size(); ++idx) {
        if (!infos[idx].tag_line) continue;
        std::string_view content = infos[idx].content(body);
        std::size_t k = content.find('@');
        std::size_t name_begin = k + 1;
        std::size_t name_end = name_begin;
        while (name_end < content.size() &&
               std::isalnum(static_cast<unsigned char>(content[name_end]))) {
            ++name_end;
        }
        BlockTag tag;
        tag.name = std::string(content.substr(name_begin, name_end - name_begin));
        tag.line = static_cast<int>(idx);
        std::string tag_body(content.substr(name_end));
        for (std::size_t cont = idx + 1; cont < infos.size() && !infos[cont].tag_line;
             ++cont) {
            tag_body.push_back('\n');
            tag_body += infos[cont].content(body);
        }
        tag.body = trim(tag_body);
        out.block_tags.push_back(std::move(tag));
    }

    // Paragraphs of the description, split on blank lines and <p> markers.
    std::vector<std::string> cur_lines;
    std::optional<ParagraphBreak> sep;
    auto cur_text = [&]() {
        std::string joined;
        for (std::size_t i = 0; i < cur_lines.size(); ++i) {
            if (i > 0) joined.push_back('\n');
            joined += cur_lines[i];
        }
        return trim(joined);
    };
    auto end_paragraph = [&]() {
        std::string text = cur_text();
        if (!text.empty()) {
            if (!out.paragraphs.empty()) {
                out.paragraph_breaks.push_back(sep.value_or(ParagraphBreak::BlankLine));
            }
            out.paragraphs.push_back(std::move(text));
            sep.reset();
        }
        cur_lines.clear();
    };
    for (std::size_t idx = 0; idx < first_tag_line; ++idx) {
        std::string_view content = infos[idx].content(body);
        if (infos[idx].blank) {
            if (!cur_text().empty()) {
                end_paragraph();
                sep = ParagraphBreak::BlankLine;
            }
            continue;
        }
        std::string working(content);
        std::size_t marker_end = 0;
        if (detail::starts_with_p_tag(working, &marker_end)) {
            if (!cur_text().empty()) {
                end_paragraph();
            }
            if (!out.paragraphs.empty()) sep = ParagraphBreak::HtmlTag;
            working.erase(0, marker_end);
        }
        std::size_t pos = detail::find_p_tag(working, 0);
        while (pos != std::string::npos) {
            cur_lines.push_back(working.substr(0, pos));
            end_paragraph();
            sep = ParagraphBreak::HtmlTag;
            const std::size_t close = working.find('>', pos);
            working.erase(0, close == std::string::npos ? working.size() : close + 1);
            pos = detail::find_p_tag(working, 0);
        }
        cur_lines.push_back(working);
    }
    end_paragraph();

    // Summary is the first sentence of the description (or all of it).
    const std::size_t se = find_sentence_end(desc);
    std::size_t summary_end_desc = desc.size();
    if (se != std::string::npos) {
        out.summary = trim(std::string_view(desc).substr(0, se));
        out.extended = trim(std::string_view(desc).substr(se));
        summary_end_desc = se;
    } else {
        out.summary = trim(desc);
        out.extended.clear();
    }
    out.first_word = detail::compute_first_word(out.summary);

    // Global offset of the summary/extended split for span attribution.
    std::size_t summary_end_global = 0;
    std::size_t summary_end_line = 0;
    for (std::size_t k = 0; k < desc_map.size(); ++k) {
        const auto [doff, goff] = desc_map[k];
        const std::size_t line_len = infos[k].line_end - infos[k].content_begin;
        if (summary_end_desc >= doff && summary_end_desc <= doff + line_len) {
            summary_end_global = goff + (summary_end_desc - doff);
            summary_end_line = k;
        }
    }
    if (desc_map.empty()) summary_end_global = 0;

    // Blank line between the summary sentence and the extended description?
    if (!out.extended.empty()) {
        std::string_view after =
            std::string_view(desc).substr(summary_end_desc);
        const std::size_t nl = after.find('\n');
        if (nl != std::string_view::npos && is_blank(after.substr(0, nl))) {
            for (std::size_t idx = summary_end_line + 1; idx < first_tag_line; ++idx) {
                if (infos[idx].blank) {
                    out.blank_line_after_summary = true;
                    break;
                }
                if (!is_blank(infos[idx].content(body))) break;
            }
        }
    }

    // Markers and inline tags over the gutter-free text.
    std::string content_text = desc;
    for (std::size_t idx = first_tag_line; idx < infos.size(); ++idx) {
        content_text.push_back('\n');
        content_text += infos[idx].content(body);
    }
    detail::scan_html_markers(content_text, out.html_markers);
    detail::scan_inline_tags(content_text, out.inline_tags);

    // Span attribution: gutters, then content classified by region.
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
        } else if (idx >= first_tag_line) {
            kind = SpanKind::Tag;
        } else if (info.line_end <= summary_end_global || desc_map.empty()) {
            kind = SpanKind::Summary;
        } else if (info.content_begin >= summary_end_global) {
            kind = SpanKind::Extended;
        } else {
            // The summary sentence ends in the middle of this line.
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
