// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/comment.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "comment_internal.hpp"

namespace commentlint {

const char* to_string(CommentDialect dialect) {
    switch (dialect) {
        case CommentDialect::Javadoc: return "javadoc";
        case CommentDialect::Pep257: return "pep257";
        case CommentDialect::Numpydoc: return "numpydoc";
        case CommentDialect::GoogleDoc: return "googledoc";
    }
    return "unknown";
}

const BlockTag* StructuredComment::find_tag(std::string_view name) const {
    for (const auto& tag : block_tags) {
        if (tag.name == name) return &tag;
    }
    return nullptr;
}

const Section* StructuredComment::find_section(std::string_view name) const {
    for (const auto& sec : sections) {
        if (sec.name == name) return &sec;
    }
    return nullptr;
}

std::size_t find_sentence_end(std::string_view text) {
    static const std::array<std::string_view, 4> kAbbrev = {"e.g", "i.e", "etc", "vs"};
    int tag_depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '{' && i + 1 < text.size() && text[i + 1] == '@') {
            ++tag_depth;
            continue;
        }
        if (c == '{' && tag_depth > 0) {
            ++tag_depth;
            continue;
        }
        if (c == '}' && tag_depth > 0) {
            --tag_depth;
            continue;
        }
        if (c != '.' || tag_depth > 0) continue;
        const bool at_end = i + 1 == text.size();
        if (!at_end && !std::isspace(static_cast<unsigned char>(text[i + 1]))) continue;
        bool abbrev = false;
        for (const auto& a : kAbbrev) {
            if (i < a.size()) continue;
            if (text.compare(i - a.size(), a.size(), a) != 0) continue;
            const std::size_t before = i - a.size();
            if (before == 0 ||
                !std::isalnum(static_cast<unsigned char>(text[before - 1]))) {
                abbrev = true;
                break;
            }
        }
        if (abbrev) continue;
        return i + 1;
    }
    return std::string_view::npos;
}

namespace detail {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            lines.emplace_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return lines;
}

void scan_html_markers(std::string_view text, std::map<std::string, int>& out) {
    int tag_depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '{' && i + 1 < text.size() && text[i + 1] == '@') {
            ++tag_depth;
            continue;
        }
        if (c == '{' && tag_depth > 0) ++tag_depth;
        if (c == '}' && tag_depth > 0) --tag_depth;
        if (c != '<' || tag_depth > 0) continue;
        std::size_t k = i + 1;
        if (k < text.size() && text[k] == '/') ++k;
        std::size_t name_begin = k;
        while (k < text.size() && std::isalnum(static_cast<unsigned char>(text[k]))) ++k;
        if (k == name_begin) continue;
        std::string name(text.substr(name_begin, k - name_begin));
        // The marker must close on this side of the next '<'.
        std::size_t close = k;
        bool ok = false;
        while (close < text.size() && text[close] != '<' && text[close] != '\n') {
            if (text[close] == '>') {
                ok = true;
                break;
            }
            ++close;
        }
        if (!ok) continue;
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        ++out[name];
        i = close;
    }
}

void scan_inline_tags(std::string_view text, std::vector<InlineTag>& out) {
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != '{' || text[i + 1] != '@') continue;
        std::size_t k = i + 2;
        std::size_t name_begin = k;
        while (k < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '.')) {
            ++k;
        }
        InlineTag tag;
        tag.name = std::string(text.substr(name_begin, k - name_begin));
        int depth = 1;
        std::size_t body_begin = k;
        while (k < text.size() && depth > 0) {
            if (text[k] == '{') ++depth;
            if (text[k] == '}') --depth;
            ++k;
        }
        const std::size_t body_end = depth == 0 ? k - 1 : k;
        tag.body = trim(text.substr(body_begin, body_end - body_begin));
        out.push_back(std::move(tag));
        i = k - 1;
    }
}

std::string compute_first_word(std::string_view summary) {
    std::size_t b = 0;
    while (b < summary.size() && std::isspace(static_cast<unsigned char>(summary[b]))) ++b;
    std::size_t e = b;
    while (e < summary.size() && !std::isspace(static_cast<unsigned char>(summary[e]))) ++e;
    std::string_view word = summary.substr(b, e - b);
    while (!word.empty()) {
        const char tail = word.back();
        if (tail == '.' || tail == ',' || tail == ';' || tail == ':' || tail == '!' ||
            tail == '?') {
            word.remove_suffix(1);
        } else {
            break;
        }
    }
    return std::string(word);
}

bool starts_with_p_tag(std::string_view content, std::size_t* marker_end) {
    std::size_t b = 0;
    while (b < content.size() && std::isspace(static_cast<unsigned char>(content[b]))) ++b;
    const std::size_t pos = find_p_tag(content, b);
    if (pos != b) return false;
    std::size_t close = content.find('>', pos);
    if (marker_end) *marker_end = close == std::string_view::npos ? content.size() : close + 1;
    return true;
}

std::size_t find_p_tag(std::string_view content, std::size_t from) {
    for (std::size_t i = from; i + 1 < content.size(); ++i) {
        if (content[i] != '<') continue;
        const char c = content[i + 1];
        if (c != 'p' && c != 'P') continue;
        if (i + 2 < content.size()) {
            const char after = content[i + 2];
            if (std::isalnum(static_cast<unsigned char>(after))) continue;  // <pre>, ...
        }
        return i;
    }
    return std::string_view::npos;
}

void merge_adjacent_spans(std::vector<AttributedSpan>& spans) {
    std::vector<AttributedSpan> merged;
    for (const auto& span : spans) {
        if (span.begin == span.end) continue;
        if (!merged.empty() && merged.back().kind == span.kind &&
            merged.back().end == span.begin) {
            merged.back().end = span.end;
        } else {
            merged.push_back(span);
        }
    }
    spans = std::move(merged);
}

}  // namespace detail
}  // namespace commentlint
