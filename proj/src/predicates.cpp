// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/predicates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string_view>

namespace commentlint {
namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

/// Word-boundary substring search; boundaries are non [A-Za-z0-9_] chars.
bool contains_word(std::string_view text, std::string_view word) {
    if (word.empty()) return false;
    std::size_t from = 0;
    while (true) {
        const std::size_t pos = text.find(word, from);
        if (pos == std::string_view::npos) return false;
        const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
        const std::size_t after = pos + word.size();
        const bool right_ok = after == text.size() || !is_word_char(text[after]);
        if (left_ok && right_ok) return true;
        from = pos + 1;
    }
}

bool contains_word_ci(std::string_view text, std::string_view word) {
    return contains_word(lowercase(text), lowercase(word));
}

constexpr std::array<std::string_view, 4> kBogusMarkers = {"FIXME", "XXX", "BROKEN",
                                                           "HACK"};

std::string_view first_bogus_marker(std::string_view text) {
    std::size_t best = std::string_view::npos;
    std::string_view found;
    for (const auto marker : kBogusMarkers) {
        std::size_t from = 0;
        while (true) {
            const std::size_t pos = text.find(marker, from);
            if (pos == std::string_view::npos) break;
            const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
            const std::size_t after = pos + marker.size();
            const bool right_ok = after == text.size() || !is_word_char(text[after]);
            if (left_ok && right_ok) {
                if (pos < best) {
                    best = pos;
                    found = marker;
                }
                break;
            }
            from = pos + 1;
        }
    }
    return found;
}

/// 0 = undetermined, 1 = imperative (lexicon entry), 2 = third person
/// (lexicon entry plus "s" or "es").
int classify_mood(const std::string& first_word) {
    const std::string fw = lowercase(first_word);
    if (fw.empty()) return 0;
    const auto& lexicon = imperative_verb_lexicon();
    const auto has = [&](const std::string& word) {
        return std::binary_search(lexicon.begin(), lexicon.end(), word);
    };
    if (has(fw)) return 1;
    if (fw.size() > 1 && fw.back() == 's' && has(fw.substr(0, fw.size() - 1))) return 2;
    if (fw.size() > 2 && fw.compare(fw.size() - 2, 2, "es") == 0 &&
        has(fw.substr(0, fw.size() - 2))) {
        return 2;
    }
    return 0;
}

std::size_t utf8_length(std::string_view line) {
    std::size_t count = 0;
    for (unsigned char c : line) {
        if ((c & 0xC0) != 0x80) ++count;
    }
    return count;
}

std::vector<std::string_view> view_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            lines.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return lines;
}

bool blank_view(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c));
    });
}

int canonical_tag_rank(const std::string& name) {
    if (name == "author") return 0;
    if (name == "version") return 1;
    if (name == "param") return 2;
    if (name == "return") return 3;
    if (name == "exception" || name == "throws") return 4;
    if (name == "see") return 5;
    if (name == "since") return 6;
    if (name == "serial") return 7;
    if (name == "deprecated") return 8;
    return -1;
}

bool deprecation_has_replacement(const BlockTag& tag) {
    if (tag.body.empty()) return false;
    if (tag.body.find("{@link") != std::string::npos) return true;  // also {@linkplain}
    return contains_word_ci(tag.body, "use");
}

// --- FMT-LINELEN -----------------------------------------------------------

const std::string_view* overlong_line(const EvalContext& ctx, std::size_t* line_out,
                                      std::vector<std::string_view>& storage) {
    const int limit = ctx.rule.int_param("max_line_length", 80);
    storage = view_lines(ctx.record.raw_comment);
    for (std::size_t i = 0; i < storage.size(); ++i) {
        if (utf8_length(storage[i]) > static_cast<std::size_t>(limit)) {
            *line_out = i;
            return &storage[i];
        }
    }
    return nullptr;
}

// --- FMT-INDENT ------------------------------------------------------------

/// Java gutter: every non-blank continuation line leads with '*' in one
/// shared column. Returns the 0-based offending line or npos.
std::size_t java_gutter_offender(std::string_view raw) {
    const auto lines = view_lines(raw);
    std::size_t column = std::string_view::npos;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (blank_view(lines[i])) continue;
        const std::size_t star = lines[i].find_first_not_of(" \t");
        if (star == std::string_view::npos || lines[i][star] != '*') return i;
        if (column == std::string_view::npos) {
            column = star;
        } else if (star != column) {
            return i;
        }
    }
    return std::string_view::npos;
}

bool quotes_only_line(std::string_view line) {
    bool seen_quote = false;
    for (char c : line) {
        if (c == '"' || c == '\'') {
            seen_quote = true;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return seen_quote;
}

/// Python gutter: continuation lines indent at least as far as the first
/// one, and a quotes-only closing line sits exactly at that gutter.
std::size_t python_gutter_offender(std::string_view raw) {
    const auto lines = view_lines(raw);
    std::size_t gutter = std::string_view::npos;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (blank_view(lines[i])) continue;
        const std::size_t indent = lines[i].find_first_not_of(" \t");
        if (gutter == std::string_view::npos) {
            gutter = indent;
        } else if (indent < gutter) {
            return i;
        }
    }
    if (gutter != std::string_view::npos && lines.size() > 1) {
        const std::string_view last = lines.back();
        if (!blank_view(last) && quotes_only_line(last)) {
            if (last.find_first_not_of(" \t") != gutter) return lines.size() - 1;
        }
    }
    return std::string_view::npos;
}

std::size_t gutter_offender(const EvalContext& ctx) {
    if (ctx.record.language == Language::Java) {
        return java_gutter_offender(ctx.record.raw_comment);
    }
    return python_gutter_offender(ctx.record.raw_comment);
}

// --- registry --------------------------------------------------------------

Predicate make(bool (*test)(const EvalContext&), std::string (*explain)(const EvalContext&),
               bool works_without_comment = false, bool works_on_malformed = false) {
    return Predicate{test, explain, works_without_comment, works_on_malformed};
}

const std::string* missing_member(const EvalContext& ctx) {
    for (const auto& member : ctx.record.visible_member_names) {
        if (!contains_word(ctx.comment.stripped_text, member)) return &member;
    }
    return nullptr;
}

std::map<std::string, Predicate> build_registry() {
    std::map<std::string, Predicate> reg;

    reg["always"] = make(
        [](const EvalContext&) { return true; },
        [](const EvalContext&) { return std::string("always applicable"); },
        /*works_without_comment=*/true, /*works_on_malformed=*/true);

    reg["comment_present"] = make(
        [](const EvalContext& ctx) { return ctx.record.comment_present; },
        [](const EvalContext&) {
            return std::string("class has no documentation comment");
        },
        /*works_without_comment=*/true, /*works_on_malformed=*/true);

    reg["summary_mood_determinable"] = make(
        [](const EvalContext& ctx) { return classify_mood(ctx.comment.first_word) != 0; },
        [](const EvalContext& ctx) {
            return "mood of '" + ctx.comment.first_word + "' is undetermined";
        });

    reg["summary_third_person"] = make(
        [](const EvalContext& ctx) { return classify_mood(ctx.comment.first_word) == 2; },
        [](const EvalContext& ctx) {
            return "first word '" + ctx.comment.first_word +
                   "' reads imperative, not third person";
        });

    reg["has_bogus_marker"] = make(
        [](const EvalContext& ctx) {
            return !first_bogus_marker(ctx.comment.stripped_text).empty();
        },
        [](const EvalContext&) {
            return std::string("no bogus-code marker (FIXME, XXX, BROKEN, HACK)");
        });

    reg["bogus_marker_is_fixme"] = make(
        [](const EvalContext& ctx) {
            const std::string_view text = ctx.comment.stripped_text;
            if (!contains_word(text, "FIXME")) return false;
            return !contains_word(text, "XXX") && !contains_word(text, "BROKEN") &&
                   !contains_word(text, "HACK");
        },
        [](const EvalContext& ctx) {
            for (const auto marker : kBogusMarkers) {
                if (marker == "FIXME") continue;
                if (contains_word(ctx.comment.stripped_text, marker)) {
                    return "marker " + std::string(marker) + " should be FIXME";
                }
            }
            return std::string("bogus marker is not FIXME");
        });

    reg["mentions_serial_form"] = make(
        [](const EvalContext& ctx) {
            return ctx.comment.find_tag("serial") != nullptr ||
                   contains_word(ctx.record.declaration_text, "Serializable");
        },
        [](const EvalContext&) {
            return std::string("no @serial tag or Serializable declaration");
        });

    reg["has_serial_tag"] = make(
        [](const EvalContext& ctx) { return ctx.comment.find_tag("serial") != nullptr; },
        [](const EvalContext&) {
            return std::string("serializable class without @serial tag");
        });

    reg["has_deprecated_tag"] = make(
        [](const EvalContext& ctx) {
            return ctx.comment.find_tag("deprecated") != nullptr;
        },
        [](const EvalContext&) { return std::string("no @deprecated tag"); });

    reg["deprecation_names_replacement"] = make(
        [](const EvalContext& ctx) {
            const BlockTag* tag = ctx.comment.find_tag("deprecated");
            return tag != nullptr && deprecation_has_replacement(*tag);
        },
        [](const EvalContext&) {
            return std::string("@deprecated names no replacement");
        });

    reg["has_multiple_paragraphs"] = make(
        [](const EvalContext& ctx) { return ctx.comment.paragraphs.size() >= 2; },
        [](const EvalContext&) { return std::string("single-paragraph description"); });

    reg["paragraphs_use_html_tag"] = make(
        [](const EvalContext& ctx) {
            for (const ParagraphBreak brk : ctx.comment.paragraph_breaks) {
                if (brk != ParagraphBreak::HtmlTag) return false;
            }
            return true;
        },
        [](const EvalContext&) {
            return std::string("paragraph break without a <p> tag");
        });

    reg["no_author_tag"] = make(
        [](const EvalContext& ctx) { return ctx.comment.find_tag("author") == nullptr; },
        [](const EvalContext& ctx) {
            const BlockTag* tag = ctx.comment.find_tag("author");
            return "@author tag present" +
                   (tag && !tag->body.empty() ? ": " + tag->body : std::string());
        });

    reg["has_summary"] = make(
        [](const EvalContext& ctx) { return !ctx.comment.summary.empty(); },
        [](const EvalContext&) { return std::string("no summary line"); });

    reg["has_extended_summary"] = make(
        [](const EvalContext& ctx) { return !ctx.comment.extended.empty(); },
        [](const EvalContext&) {
            return std::string("no extended summary after the short summary");
        });

    reg["has_summary_and_extended"] = make(
        [](const EvalContext& ctx) {
            return !ctx.comment.summary.empty() && !ctx.comment.extended.empty();
        },
        [](const EvalContext&) {
            return std::string("summary or extended summary missing");
        });

    reg["blank_line_after_summary"] = make(
        [](const EvalContext& ctx) { return ctx.comment.blank_line_after_summary; },
        [](const EvalContext&) {
            return std::string("no blank line between short and extended summary");
        });

    reg["has_visible_members"] = make(
        [](const EvalContext& ctx) { return !ctx.record.visible_member_names.empty(); },
        [](const EvalContext&) { return std::string("no visible members"); });

    reg["mentions_all_members"] = make(
        [](const EvalContext& ctx) {
            if (ctx.comment.find_section("Methods") != nullptr) return true;
            if (ctx.comment.find_section("Attributes") != nullptr) return true;
            return missing_member(ctx) == nullptr;
        },
        [](const EvalContext& ctx) {
            const std::string* member = missing_member(ctx);
            if (!member) return std::string("public members not listed");
            return "member '" + *member + "' not mentioned";
        });

    reg["has_ordered_tags"] = make(
        [](const EvalContext& ctx) {
            int distinct = 0;
            int seen_mask = 0;
            for (const auto& tag : ctx.comment.block_tags) {
                const int rank = canonical_tag_rank(tag.name);
                if (rank < 0 || (seen_mask & (1 << rank))) continue;
                seen_mask |= 1 << rank;
                ++distinct;
            }
            return distinct >= 2;
        },
        [](const EvalContext&) {
            return std::string("fewer than two ordered block tags");
        });

    reg["tags_in_canonical_order"] = make(
        [](const EvalContext& ctx) {
            int last = -1;
            for (const auto& tag : ctx.comment.block_tags) {
                const int rank = canonical_tag_rank(tag.name);
                if (rank < 0) continue;
                if (rank < last) return false;
                last = rank;
            }
            return true;
        },
        [](const EvalContext& ctx) {
            int last = -1;
            for (const auto& tag : ctx.comment.block_tags) {
                const int rank = canonical_tag_rank(tag.name);
                if (rank < 0) continue;
                if (rank < last) return "@" + tag.name + " out of canonical order";
                last = rank;
            }
            return std::string("tags out of canonical order");
        });

    reg["summary_starts_with_letter"] = make(
        [](const EvalContext& ctx) {
            return !ctx.comment.summary.empty() &&
                   std::isalpha(static_cast<unsigned char>(ctx.comment.summary[0]));
        },
        [](const EvalContext&) {
            return std::string("summary does not start with a letter");
        });

    reg["summary_capitalized"] = make(
        [](const EvalContext& ctx) {
            return !ctx.comment.summary.empty() &&
                   std::isupper(static_cast<unsigned char>(ctx.comment.summary[0]));
        },
        [](const EvalContext& ctx) {
            return "summary starts lowercase: '" + ctx.comment.first_word + "'";
        });

    reg["summary_ends_with_period"] = make(
        [](const EvalContext& ctx) {
            return !ctx.comment.summary.empty() && ctx.comment.summary.back() == '.';
        },
        [](const EvalContext&) {
            return std::string("summary does not end with a period");
        });

    reg["lines_within_limit"] = make(
        [](const EvalContext& ctx) {
            std::vector<std::string_view> storage;
            std::size_t line = 0;
            return overlong_line(ctx, &line, storage) == nullptr;
        },
        [](const EvalContext& ctx) {
            std::vector<std::string_view> storage;
            std::size_t line = 0;
            const std::string_view* hit = overlong_line(ctx, &line, storage);
            if (!hit) return std::string("line over the length limit");
            const int limit = ctx.rule.int_param("max_line_length", 80);
            return "line " + std::to_string(ctx.record.comment_start_line +
                                            static_cast<int>(line)) +
                   " is " + std::to_string(utf8_length(*hit)) + " characters (limit " +
                   std::to_string(limit) + ")";
        });

    reg["is_multiline"] = make(
        [](const EvalContext& ctx) { return ctx.comment.line_count >= 2; },
        [](const EvalContext&) { return std::string("single-line comment"); });

    reg["gutter_aligned"] = make(
        [](const EvalContext& ctx) {
            return gutter_offender(ctx) == std::string_view::npos;
        },
        [](const EvalContext& ctx) {
            const std::size_t line = gutter_offender(ctx);
            if (line == std::string_view::npos) {
                return std::string("gutter misaligned");
            }
            return "gutter misaligned at line " +
                   std::to_string(ctx.record.comment_start_line + static_cast<int>(line));
        });

    return reg;
}

}  // namespace

const std::map<std::string, Predicate>& predicate_registry() {
    static const std::map<std::string, Predicate> kRegistry = build_registry();
    return kRegistry;
}

bool is_known_predicate(const std::string& name) {
    return predicate_registry().count(name) > 0;
}

const std::vector<std::string>& imperative_verb_lexicon() {
    static const std::vector<std::string> kVerbs = {
        "add",        "adjust",     "advance",    "allocate",   "append",
        "apply",      "assert",     "assign",     "attach",     "await",
        "bind",       "build",      "cache",      "calculate",  "call",
        "cancel",     "capture",    "check",      "clean",      "clear",
        "clone",      "close",      "collect",    "combine",    "compare",
        "compile",    "compute",    "configure",  "connect",    "construct",
        "convert",    "copy",       "count",      "create",     "decode",
        "define",     "delete",     "describe",   "destroy",    "detach",
        "detect",     "determine",  "disable",    "dispatch",   "display",
        "dispose",    "drain",      "dump",       "emit",       "enable",
        "encode",     "enforce",    "ensure",     "enumerate",  "evaluate",
        "execute",    "expand",     "export",     "extract",    "fetch",
        "fill",       "filter",     "find",       "flush",      "fold",
        "format",     "forward",    "generate",   "get",        "group",
        "handle",     "hold",       "import",     "initialize", "insert",
        "inspect",    "install",    "invoke",     "iterate",    "join",
        "keep",       "limit",      "list",       "load",       "lock",
        "log",        "lookup",     "manage",     "map",        "mark",
        "match",      "measure",    "merge",      "normalize",  "notify",
        "open",       "own",        "parse",      "perform",    "persist",
        "populate",   "prepare",    "print",      "process",    "produce",
        "provide",    "publish",    "push",       "put",        "query",
        "queue",      "read",       "rebuild",    "receive",    "record",
        "register",   "release",    "remove",     "render",     "replace",
        "replicate",  "report",     "represent",  "reset",      "resolve",
        "retain",     "retrieve",   "return",     "route",      "run",
        "save",       "scan",       "schedule",   "seal",       "select",
        "send",       "serialize",  "set",        "shift",      "sort",
        "spawn",      "split",      "start",      "stop",       "store",
        "submit",     "supply",     "suspend",    "synchronize", "take",
        "terminate",  "track",      "transform",  "translate",  "traverse",
        "trigger",    "trim",       "update",     "validate",   "verify",
        "wait",       "walk",       "work",       "wrap",       "write",
    };
    return kVerbs;
}

}  // namespace commentlint
