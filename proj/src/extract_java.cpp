// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/extract.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

namespace commentlint {
namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

enum class TokKind {
    Ident,
    Punct,
    String,
    CharLit,
    Number,
    DocComment,
    PlainComment,
    LineComment,
    Eof,
};

struct Token {
    TokKind kind = TokKind::Eof;
    std::size_t begin = 0;
    std::size_t end = 0;  // one past the last character
    char punct = 0;
};

/// Tolerant Java lexer: identifiers, punctuation, literals, comments. Numeric
/// literals are lumped into single atoms; operators come out one char at a
/// time, which is all the declaration scan needs.
class JavaLexer {
public:
    JavaLexer(const std::string& text, const SourceUnit& unit,
              std::vector<ExtractionDiagnostic>& diags)
        : text_(text), unit_(unit), diags_(diags) {}

    Token next() {
        skip_whitespace();
        Token tok;
        tok.begin = pos_;
        if (pos_ >= text_.size()) {
            tok.kind = TokKind::Eof;
            tok.end = pos_;
            return tok;
        }
        const char c = text_[pos_];
        if (c == '/' && pos_ + 1 < text_.size()) {
            const char c1 = text_[pos_ + 1];
            if (c1 == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                tok.kind = TokKind::LineComment;
                tok.end = pos_;
                return tok;
            }
            if (c1 == '*') {
                lex_block_comment(tok);
                return tok;
            }
        }
        if (c == '"') {
            lex_string(tok);
            return tok;
        }
        if (c == '\'') {
            lex_char(tok);
            return tok;
        }
        if (is_ident_start(c)) {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            tok.kind = TokKind::Ident;
            tok.end = pos_;
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   (is_ident_char(text_[pos_]) || text_[pos_] == '.')) {
                ++pos_;
            }
            tok.kind = TokKind::Number;
            tok.end = pos_;
            return tok;
        }
        ++pos_;
        tok.kind = TokKind::Punct;
        tok.punct = c;
        tok.end = pos_;
        return tok;
    }

    std::string_view spelling(const Token& tok) const {
        return std::string_view(text_).substr(tok.begin, tok.end - tok.begin);
    }

private:
    void skip_whitespace() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void lex_block_comment(Token& tok) {
        const std::size_t start = pos_;
        pos_ += 2;  // consume "/*"
        const bool doc = pos_ < text_.size() && text_[pos_] == '*' &&
                         !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '/');
        bool closed = false;
        while (pos_ + 1 < text_.size()) {
            if (text_[pos_] == '*' && text_[pos_ + 1] == '/') {
                pos_ += 2;
                closed = true;
                break;
            }
            ++pos_;
        }
        if (!closed) {
            pos_ = text_.size();
            diags_.push_back({unit_.path.generic_string(), unit_.line_of(start),
                              "unterminated block comment"});
        }
        tok.kind = doc ? TokKind::DocComment : TokKind::PlainComment;
        tok.end = pos_;
    }

    void lex_string(Token& tok) {
        const std::size_t start = pos_;
        if (text_.compare(pos_, 3, "\"\"\"") == 0) {
            pos_ += 3;  // text block
            bool closed = false;
            while (pos_ < text_.size()) {
                if (text_[pos_] == '\\') {
                    pos_ += 2;
                    continue;
                }
                if (text_.compare(pos_, 3, "\"\"\"") == 0) {
                    pos_ += 3;
                    closed = true;
                    break;
                }
                ++pos_;
            }
            if (!closed) {
                pos_ = text_.size();
                diags_.push_back({unit_.path.generic_string(), unit_.line_of(start),
                                  "unterminated text block"});
            }
        } else {
            ++pos_;
            bool closed = false;
            while (pos_ < text_.size() && text_[pos_] != '\n') {
                if (text_[pos_] == '\\') {
                    pos_ += 2;
                    continue;
                }
                if (text_[pos_] == '"') {
                    ++pos_;
                    closed = true;
                    break;
                }
                ++pos_;
            }
            if (!closed) {
                diags_.push_back({unit_.path.generic_string(), unit_.line_of(start),
                                  "unterminated string literal"});
            }
        }
        tok.kind = TokKind::String;
        tok.end = pos_;
    }

    void lex_char(Token& tok) {
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            if (text_[pos_] == '\\') {
                pos_ += 2;
                continue;
            }
            if (text_[pos_] == '\'') {
                ++pos_;
                break;
            }
            ++pos_;
        }
        tok.kind = TokKind::CharLit;
        tok.end = pos_;
    }

    const std::string& text_;
    const SourceUnit& unit_;
    std::vector<ExtractionDiagnostic>& diags_;
    std::size_t pos_ = 0;
};

const std::array<std::string_view, 14> kModifiers = {
    "public",   "protected", "private",      "static",   "final",
    "abstract", "strictfp",  "sealed",       "default",  "native",
    "synchronized", "transient", "volatile", "non",  // "non" starts non-sealed
};

bool is_modifier_word(std::string_view word) {
    return std::find(kModifiers.begin(), kModifiers.end(), word) != kModifiers.end();
}

bool is_decl_keyword(std::string_view word) {
    return word == "class" || word == "interface" || word == "enum";
}

std::string collapse_whitespace(std::string_view raw) {
    std::string out;
    bool in_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

struct PendingDoc {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Frame {
    bool class_body = false;      // false: method body, initializer, ...
    std::size_t record_index = 0; // valid when class_body
    std::string class_name;
};

/// Per-statement state of the member scan inside a class body.
struct MemberStmt {
    bool saw_public = false;
    bool saw_paren = false;   // a '(' at depth 0 makes this a method-like statement
    bool captured = false;    // a name was already taken from this declarator
    std::string last_ident;
    int angle_depth = 0;
    int paren_depth = 0;

    void reset() { *this = MemberStmt{}; }

    /// Comma in a declarator list: the next declarator shares the modifiers.
    void next_declarator() {
        const bool pub = saw_public;
        const bool paren = saw_paren;
        reset();
        saw_public = pub;
        saw_paren = paren;
    }
};

class JavaExtractor {
public:
    JavaExtractor(const SourceUnit& unit, ExtractionResult& result)
        : unit_(unit), result_(result), lexer_(unit.text, unit, result.diagnostics) {}

    void run() {
        Token tok = lexer_.next();
        while (tok.kind != TokKind::Eof) {
            tok = handle(tok);
        }
        for (auto& rec : result_.records) {
            auto& names = rec.visible_member_names;
            std::sort(names.begin(), names.end());
            names.erase(std::unique(names.begin(), names.end()), names.end());
        }
    }

private:
    Token handle(Token tok) {
        switch (tok.kind) {
            case TokKind::DocComment:
                pending_ = PendingDoc{tok.begin, tok.end};
                run_start_.reset();
                after_non_ = false;
                return lexer_.next();
            case TokKind::PlainComment:
            case TokKind::LineComment:
                // Ordinary comments break doc association: the doc block must
                // be separated from the declaration only by whitespace,
                // annotations, and modifiers.
                pending_.reset();
                run_start_.reset();
                after_non_ = false;
                return lexer_.next();
            case TokKind::Ident:
                return handle_ident(tok);
            case TokKind::Punct:
                return handle_punct(tok);
            default:
                // Literals end any modifier run and clear a pending doc.
                pending_.reset();
                run_start_.reset();
                after_non_ = false;
                prev_punct_ = 0;
                return lexer_.next();
        }
    }

    Token handle_ident(Token tok) {
        const std::string_view word = lexer_.spelling(tok);
        if (is_decl_keyword(word) && prev_punct_ != '.') {
            prev_punct_ = 0;
            after_non_ = false;
            return handle_declaration(tok);
        }
        if (is_modifier_word(word)) {
            if (!run_start_) run_start_ = tok.begin;
            after_non_ = (word == "non");
            if (top_is_class_body() && stmt_.paren_depth == 0 && word == "public") {
                stmt_.saw_public = true;
            }
        } else {
            pending_.reset();
            run_start_.reset();
            after_non_ = false;
            if (top_is_class_body() && stmt_.paren_depth == 0 && stmt_.angle_depth == 0) {
                stmt_.last_ident = std::string(word);
            }
        }
        prev_punct_ = 0;
        return lexer_.next();
    }

    Token handle_punct(Token tok) {
        const char c = tok.punct;
        prev_punct_ = c;
        if (c == '-' && after_non_) {
            // middle of a `non-sealed` modifier: stays transparent
            after_non_ = false;
            return lexer_.next();
        }
        after_non_ = false;
        switch (c) {
            case '@':
                return handle_at(tok);
            case '{':
                frames_.push_back(Frame{});  // plain body (initializer, method, ...)
                stmt_stack_.push_back(stmt_);
                stmt_.reset();
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case '}':
                if (!frames_.empty()) frames_.pop_back();
                if (!stmt_stack_.empty()) stmt_stack_.pop_back();
                stmt_.reset();
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case ';':
                maybe_capture_field();
                stmt_.reset();
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case ',':
                if (top_is_class_body() && stmt_.paren_depth == 0 &&
                    stmt_.angle_depth == 0) {
                    maybe_capture_field();
                    stmt_.next_declarator();
                }
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case '(':
                if (top_is_class_body() && stmt_.paren_depth == 0) {
                    maybe_capture_method();
                    stmt_.saw_paren = true;
                }
                ++stmt_.paren_depth;
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case ')':
                if (stmt_.paren_depth > 0) --stmt_.paren_depth;
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case '<':
                if (top_is_class_body() && stmt_.paren_depth == 0) ++stmt_.angle_depth;
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case '>':
                if (top_is_class_body() && stmt_.paren_depth == 0 &&
                    stmt_.angle_depth > 0) {
                    --stmt_.angle_depth;
                }
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
            case '=':
                pending_.reset();
                run_start_.reset();
                if (top_is_class_body() && stmt_.paren_depth == 0) {
                    maybe_capture_field();
                    return skip_initializer();
                }
                return lexer_.next();
            default:
                pending_.reset();
                run_start_.reset();
                return lexer_.next();
        }
    }

    /// `@Anno`, `@pkg.Anno(...)` are transparent for doc association;
    /// `@interface` opens an annotation-type declaration.
    Token handle_at(Token at_tok) {
        if (!run_start_) run_start_ = at_tok.begin;
        Token tok = lexer_.next();
        if (tok.kind == TokKind::Ident && lexer_.spelling(tok) == "interface") {
            return handle_declaration(tok);
        }
        while (tok.kind == TokKind::Ident) {  // dotted annotation name
            Token after = lexer_.next();
            if (after.kind == TokKind::Punct && after.punct == '.') {
                tok = lexer_.next();
                continue;
            }
            tok = after;
            break;
        }
        if (tok.kind == TokKind::Punct && tok.punct == '(') {
            int depth = 1;
            while (depth > 0) {
                Token t = lexer_.next();
                if (t.kind == TokKind::Eof) return t;
                if (t.kind == TokKind::Punct && t.punct == '(') ++depth;
                if (t.kind == TokKind::Punct && t.punct == ')') --depth;
            }
            return lexer_.next();
        }
        return tok;
    }

    Token handle_declaration(Token keyword_tok) {
        const std::size_t header_start = run_start_.value_or(keyword_tok.begin);
        run_start_.reset();

        ClassCommentRecord rec;
        rec.file = unit_.path.generic_string();
        rec.language = Language::Java;
        rec.class_line = unit_.line_of(keyword_tok.begin);
        if (pending_) {
            rec.comment_present = true;
            rec.raw_comment =
                unit_.text.substr(pending_->begin, pending_->end - pending_->begin);
            rec.comment_start_line = unit_.line_of(pending_->begin);
            rec.comment_end_line =
                unit_.line_of(pending_->end == 0 ? 0 : pending_->end - 1);
        }
        pending_.reset();

        Token tok = lexer_.next();
        while (tok.kind == TokKind::DocComment || tok.kind == TokKind::PlainComment ||
               tok.kind == TokKind::LineComment) {
            tok = lexer_.next();
        }
        if (tok.kind != TokKind::Ident) {
            result_.diagnostics.push_back({rec.file, rec.class_line,
                                           "class keyword without a name"});
            stmt_.reset();
            return tok;
        }
        rec.class_name = std::string(lexer_.spelling(tok));
        rec.qualified_name = qualified(rec.class_name);

        // Consume the rest of the header up to the body brace.
        std::size_t header_end = tok.end;
        tok = lexer_.next();
        while (tok.kind != TokKind::Eof) {
            if (tok.kind == TokKind::Punct && (tok.punct == '{' || tok.punct == ';')) break;
            if (tok.kind != TokKind::DocComment && tok.kind != TokKind::PlainComment &&
                tok.kind != TokKind::LineComment) {
                header_end = tok.end;
            }
            tok = lexer_.next();
        }
        rec.declaration_text = collapse_whitespace(
            std::string_view(unit_.text).substr(header_start, header_end - header_start));
        result_.records.push_back(std::move(rec));

        if (tok.kind == TokKind::Punct && tok.punct == '{') {
            Frame frame;
            frame.class_body = true;
            frame.record_index = result_.records.size() - 1;
            frame.class_name = result_.records.back().class_name;
            frames_.push_back(frame);
            stmt_stack_.push_back(stmt_);
            stmt_.reset();
            return lexer_.next();
        }
        stmt_.reset();
        return tok;  // ';' or EOF, reprocessed by the main loop
    }

    /// After `=` in a class-body statement: skip the initializer expression.
    /// Nested groups cover anonymous classes and array literals; the statement
    /// continues at `,` and ends at `;` once every group is closed.
    Token skip_initializer() {
        int paren = 0, brace = 0, bracket = 0;
        while (true) {
            Token t = lexer_.next();
            if (t.kind == TokKind::Eof) return t;
            if (t.kind != TokKind::Punct) continue;
            switch (t.punct) {
                case '(': ++paren; break;
                case ')': if (paren > 0) --paren; break;
                case '{': ++brace; break;
                case '}': if (brace > 0) --brace; break;
                case '[': ++bracket; break;
                case ']': if (bracket > 0) --bracket; break;
                case ',':
                    if (paren == 0 && brace == 0 && bracket == 0) {
                        stmt_.next_declarator();
                        return lexer_.next();
                    }
                    break;
                case ';':
                    if (paren == 0 && brace == 0 && bracket == 0) {
                        stmt_.reset();
                        return lexer_.next();
                    }
                    break;
                default: break;
            }
        }
    }

    bool top_is_class_body() const {
        return !frames_.empty() && frames_.back().class_body;
    }

    void maybe_capture_field() {
        if (!top_is_class_body() || stmt_.captured || stmt_.saw_paren) return;
        if (!stmt_.saw_public || stmt_.last_ident.empty()) return;
        add_member(stmt_.last_ident);
        stmt_.captured = true;
    }

    void maybe_capture_method() {
        if (!top_is_class_body() || stmt_.captured) return;
        if (!stmt_.saw_public || stmt_.last_ident.empty()) return;
        if (stmt_.last_ident == frames_.back().class_name) return;  // constructor
        add_member(stmt_.last_ident);
        stmt_.captured = true;
    }

    void add_member(const std::string& name) {
        result_.records[frames_.back().record_index].visible_member_names.push_back(name);
    }

    std::string qualified(const std::string& name) const {
        std::string out;
        for (const auto& f : frames_) {
            if (!f.class_body) continue;
            out += result_.records[f.record_index].class_name;
            out += '.';
        }
        out += name;
        return out;
    }

    const SourceUnit& unit_;
    ExtractionResult& result_;
    JavaLexer lexer_;
    std::optional<PendingDoc> pending_;
    std::optional<std::size_t> run_start_;
    bool after_non_ = false;
    char prev_punct_ = 0;
    std::vector<Frame> frames_;
    std::vector<MemberStmt> stmt_stack_;
    MemberStmt stmt_;
};

}  // namespace

ExtractionResult extract_java(const SourceUnit& unit);

ExtractionResult extract_java(const SourceUnit& unit) {
    ExtractionResult result;
    JavaExtractor extractor(unit, result);
    extractor.run();
    return result;
}

}  // namespace commentlint
