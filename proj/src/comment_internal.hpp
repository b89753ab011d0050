// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "commentlint/comment.hpp"

namespace commentlint {
namespace detail {

std::string trim(std::string_view s);
bool is_blank(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);

/// Counts HTML-looking markers (`<p>`, `</p>`, `<li ...>`) by lowercased tag
/// name, skipping `{@...}` inline-tag regions.
void scan_html_markers(std::string_view text, std::map<std::string, int>& out);

/// Collects `{@name body}` inline tags, braces balanced.
void scan_inline_tags(std::string_view text, std::vector<InlineTag>& out);

/// First whitespace-delimited token with trailing punctuation stripped.
std::string compute_first_word(std::string_view summary);

/// True when the line content starts (after optional blanks) with a `<p`
/// marker; `marker_end` is set past the closing '>'.
bool starts_with_p_tag(std::string_view content, std::size_t* marker_end);

/// Offset of the first `<p` marker in the line, npos when absent.
std::size_t find_p_tag(std::string_view content, std::size_t from);

void merge_adjacent_spans(std::vector<AttributedSpan>& spans);

}  // namespace detail
}  // namespace commentlint
