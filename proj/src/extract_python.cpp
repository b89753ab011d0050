// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/extract.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace commentlint {
namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Statement-leading words that can never begin an attribute assignment.
const std::array<std::string_view, 28> kPyKeywords = {
    "False", "None",   "True",   "and",    "as",     "assert", "await",
    "break", "class",  "continue", "def",  "del",    "elif",   "else",
    "except", "finally", "for",  "from",   "global", "if",     "import",
    "in",    "is",     "lambda", "nonlocal", "not",  "or",     "while",
};

bool is_py_keyword(std::string_view word) {
    return std::find(kPyKeywords.begin(), kPyKeywords.end(), word) != kPyKeywords.end();
}

struct PyFrame {
    std::string name;
    int header_indent = 0;
    int body_indent = -1;          // -1 unknown yet, -2 inline or closed
    std::size_t record_index = 0;
    bool in_header = true;         // between `class` and the header colon
    bool awaiting_first_stmt = false;
};

class PythonExtractor {
public:
    PythonExtractor(const SourceUnit& unit, ExtractionResult& result)
        : unit_(unit), text_(unit.text), result_(result) {}

    void run() {
        const std::size_t n = text_.size();
        std::size_t i = 0;
        bool line_start = true;
        while (i < n) {
            if (line_start) {
                line_start = false;
                std::size_t j = i;
                int col = 0;
                while (j < n && (text_[j] == ' ' || text_[j] == '\t')) {
                    col = text_[j] == '\t' ? (col / 8 + 1) * 8 : col + 1;
                    ++j;
                }
                if (j >= n) break;
                if (text_[j] == '\n') {  // blank line: scopes stay open
                    i = j + 1;
                    line_start = true;
                    continue;
                }
                if (text_[j] == '#') {
                    while (j < n && text_[j] != '\n') ++j;
                    i = j;
                    continue;
                }
                i = handle_statement(j, col);
                continue;
            }

            const char c = text_[i];
            if (c == '#') {
                while (i < n && text_[i] != '\n') ++i;
                continue;
            }
            if (c == '\\' && i + 1 < n && text_[i + 1] == '\n') {
                i += 2;  // explicit line continuation: no statement boundary
                continue;
            }
            if (c == '\n') {
                ++i;
                if (bracket_depth_ == 0) line_start = true;
                continue;
            }
            if (c == '\'' || c == '"') {
                bool closed = false;
                i = consume_string(i, &closed);
                continue;
            }
            if (c == '(' || c == '[' || c == '{') {
                ++bracket_depth_;
            } else if (c == ')' || c == ']' || c == '}') {
                if (bracket_depth_ > 0) --bracket_depth_;
            } else if (c == ':' && bracket_depth_ == 0 && !frames_.empty() &&
                       frames_.back().in_header) {
                i = close_header(i);
                continue;
            }
            ++i;
        }
    }

private:
    /// Consumes a string literal starting at the opening quote. Handles one-
    /// and three-quote delimiters; backslash always escapes the next character
    /// (which matches how the tokenizer finds the closing quote, raw or not).
    std::size_t consume_string(std::size_t i, bool* closed) {
        const std::size_t n = text_.size();
        const char q = text_[i];
        *closed = false;
        const bool triple = i + 2 < n && text_[i + 1] == q && text_[i + 2] == q;
        if (triple) {
            i += 3;
            while (i < n) {
                if (text_[i] == '\\') {
                    i += 2;
                    continue;
                }
                if (text_[i] == q && i + 2 < n && text_[i + 1] == q && text_[i + 2] == q) {
                    *closed = true;
                    return i + 3;
                }
                ++i;
            }
            return n;
        }
        ++i;
        while (i < n && text_[i] != '\n') {
            if (text_[i] == '\\') {
                i += 2;
                continue;
            }
            if (text_[i] == q) {
                *closed = true;
                return i + 1;
            }
            ++i;
        }
        return i;
    }

    /// Called at the header-ending colon of the innermost class frame.
    /// Decides between a block body (docstring may follow on later lines) and
    /// an inline body on the same line. Returns the resume position.
    std::size_t close_header(std::size_t colon) {
        PyFrame& frame = frames_.back();
        frame.in_header = false;
        const std::size_t n = text_.size();
        std::size_t k = colon + 1;
        while (k < n && (text_[k] == ' ' || text_[k] == '\t')) ++k;
        if (k >= n || text_[k] == '\n' || text_[k] == '#') {
            frame.awaiting_first_stmt = true;
            return colon + 1;
        }
        // Inline body: the whole suite lives on the header line.
        frame.body_indent = -2;
        if (peek_docstring_start(k)) {
            return attach_docstring(frame, k);
        }
        return k;
    }

    /// True when position k starts a string literal that can be a docstring
    /// (optional r/u prefix; bytes and f-strings do not count).
    bool peek_docstring_start(std::size_t k) const {
        const std::size_t n = text_.size();
        int prefix = 0;
        while (k < n && prefix < 2 && is_ident_start(text_[k])) {
            const char p = text_[k];
            if (p == 'r' || p == 'R' || p == 'u' || p == 'U') {
                ++k;
                ++prefix;
                continue;
            }
            return false;
        }
        return k < n && (text_[k] == '"' || text_[k] == '\'');
    }

    std::size_t attach_docstring(PyFrame& frame, std::size_t start) {
        const std::size_t n = text_.size();
        std::size_t q = start;
        while (q < n && text_[q] != '"' && text_[q] != '\'') ++q;
        bool closed = false;
        const std::size_t end = consume_string(q, &closed);
        ClassCommentRecord& rec = result_.records[frame.record_index];
        rec.comment_present = true;
        rec.raw_comment = text_.substr(start, end - start);
        rec.comment_start_line = unit_.line_of(start);
        rec.comment_end_line = unit_.line_of(end == 0 ? 0 : end - 1);
        if (!closed) {
            result_.diagnostics.push_back({rec.file, rec.comment_start_line,
                                           "unterminated docstring literal"});
        }
        return end;
    }

    /// Dispatches one statement whose first non-blank character sits at `j`
    /// with effective indentation `col`. Returns the position scanning should
    /// resume from.
    std::size_t handle_statement(std::size_t j, int col) {
        // A frame still in_header here has a broken header (its colon would
        // have kept the line logically open); popping it is the tolerant move.
        while (!frames_.empty() && col <= frames_.back().header_indent) {
            frames_.pop_back();
        }

        if (!frames_.empty()) {
            PyFrame& top = frames_.back();
            if (top.awaiting_first_stmt && col > top.header_indent) {
                top.awaiting_first_stmt = false;
                top.body_indent = col;
                if (peek_docstring_start(j)) {
                    return attach_docstring(top, j);
                }
            } else if (top.body_indent == col) {
                scan_member(j);
            }
        }

        const std::string_view word = peek_word(j);
        if (word == "class") {
            handle_class(j, col);
        }
        return j;
    }

    std::string_view peek_word(std::size_t j) const {
        if (j >= text_.size() || !is_ident_start(text_[j])) return {};
        std::size_t k = j;
        while (k < text_.size() && is_ident_char(text_[k])) ++k;
        return std::string_view(text_).substr(j, k - j);
    }

    void handle_class(std::size_t j, int col) {
        std::size_t k = j + 5;  // past "class"
        const std::size_t n = text_.size();
        while (k < n && (text_[k] == ' ' || text_[k] == '\t')) ++k;
        if (k >= n || !is_ident_start(text_[k])) return;
        std::size_t name_end = k;
        while (name_end < n && is_ident_char(text_[name_end])) ++name_end;

        ClassCommentRecord rec;
        rec.class_name = text_.substr(k, name_end - k);
        rec.file = unit_.path.generic_string();
        rec.language = Language::Python;
        rec.class_line = unit_.line_of(j);
        std::string qualified;
        for (const auto& f : frames_) {
            qualified += f.name;
            qualified += '.';
        }
        qualified += rec.class_name;
        rec.qualified_name = qualified;
        rec.declaration_text = first_line_of_header(j);
        result_.records.push_back(std::move(rec));

        PyFrame frame;
        frame.name = result_.records.back().class_name;
        frame.header_indent = col;
        frame.record_index = result_.records.size() - 1;
        frame.in_header = true;
        frames_.push_back(frame);
    }

    std::string first_line_of_header(std::size_t j) const {
        std::size_t e = j;
        while (e < text_.size() && text_[e] != '\n') ++e;
        std::string line = text_.substr(j, e - j);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
            line.pop_back();
        }
        return line;
    }

    /// Member heuristics at class-body indentation: `def name`, `async def
    /// name`, and simple assignment/annotation targets. Underscore-prefixed
    /// names are non-public and skipped.
    void scan_member(std::size_t j) {
        const std::string_view word = peek_word(j);
        const std::size_t n = text_.size();
        if (word == "def" || word == "async") {
            std::size_t k = j + word.size();
            if (word == "async") {
                while (k < n && (text_[k] == ' ' || text_[k] == '\t')) ++k;
                if (peek_word(k) != "def") return;
                k += 3;
            }
            while (k < n && (text_[k] == ' ' || text_[k] == '\t')) ++k;
            std::size_t e = k;
            while (e < n && is_ident_char(text_[e])) ++e;
            if (e > k && is_ident_start(text_[k]) && text_[k] != '_') {
                add_member(text_.substr(k, e - k));
            }
            return;
        }
        if (word.empty() || is_py_keyword(word)) return;

        // Target list: IDENT (',' IDENT)* followed by '=' (not '==') or ':'.
        std::vector<std::string> names;
        std::size_t k = j;
        while (true) {
            if (k >= n || !is_ident_start(text_[k])) return;
            std::size_t e = k;
            while (e < n && is_ident_char(text_[e])) ++e;
            names.push_back(text_.substr(k, e - k));
            k = e;
            while (k < n && (text_[k] == ' ' || text_[k] == '\t')) ++k;
            if (k >= n) return;
            const char c = text_[k];
            if (c == ',') {
                ++k;
                while (k < n && (text_[k] == ' ' || text_[k] == '\t')) ++k;
                continue;
            }
            if (c == ':' || (c == '=' && (k + 1 >= n || text_[k + 1] != '='))) {
                for (const auto& name : names) {
                    if (name[0] != '_') add_member(name);
                }
                return;
            }
            return;
        }
    }

    void add_member(const std::string& name) {
        result_.records[frames_.back().record_index].visible_member_names.push_back(name);
    }

    const SourceUnit& unit_;
    const std::string& text_;
    ExtractionResult& result_;
    std::vector<PyFrame> frames_;
    int bracket_depth_ = 0;
};

}  // namespace

ExtractionResult extract_java(const SourceUnit& unit);
ExtractionResult extract_python(const SourceUnit& unit);

ExtractionResult extract_python(const SourceUnit& unit) {
    ExtractionResult result;
    PythonExtractor extractor(unit, result);
    extractor.run();
    for (auto& rec : result.records) {
        auto& names = rec.visible_member_names;
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
    }
    return result;
}

ExtractionResult extract_class_comments(const SourceUnit& unit) {
    return unit.language == Language::Java ? extract_java(unit) : extract_python(unit);
}

}  // namespace commentlint
