// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#include "commentlint/source.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace commentlint {

const char* to_string(Language lang) {
    return lang == Language::Java ? "java" : "python";
}

std::optional<Language> language_from_extension(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".java") return Language::Java;
    if (ext == ".py") return Language::Python;
    return std::nullopt;
}

int SourceUnit::line_of(std::size_t offset) const {
    auto it = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
    return static_cast<int>(it - line_starts.begin());
}

bool is_valid_utf8(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        std::size_t len;
        unsigned min_cp;
        if (b0 < 0x80) {
            ++i;
            continue;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            min_cp = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            min_cp = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            min_cp = 0x10000;
        } else {
            return false;
        }
        if (i + len > n) return false;
        unsigned cp = b0 & (0xFF >> (len + 1));
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (b & 0x3F);
        }
        // Overlong forms, surrogates, and out-of-range values are not UTF-8.
        if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += len;
    }
    return true;
}

namespace {

std::string normalize_newlines(std::string text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

}  // namespace

SourceUnit make_source_unit(std::filesystem::path path, Language language, std::string text) {
    SourceUnit unit;
    unit.path = std::move(path);
    unit.language = language;
    unit.text = normalize_newlines(std::move(text));
    unit.line_starts.push_back(0);
    for (std::size_t i = 0; i < unit.text.size(); ++i) {
        if (unit.text[i] == '\n') unit.line_starts.push_back(i + 1);
    }
    return unit;
}

DecodeResult decode_source(const std::filesystem::path& path, std::optional<Language> hint) {
    std::optional<Language> lang = hint;
    if (!lang) lang = language_from_extension(path);
    if (!lang) {
        return DecodeError{DecodeErrorKind::UnknownLanguage, path,
                           "cannot infer language from extension"};
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return DecodeError{DecodeErrorKind::Io, path, "cannot open file"};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        return DecodeError{DecodeErrorKind::Io, path, "read failed"};
    }
    std::string text = buf.str();

    // Tolerate a UTF-8 BOM; anything else must already be valid UTF-8.
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        text.erase(0, 3);
    }
    if (!is_valid_utf8(text)) {
        return DecodeError{DecodeErrorKind::Encoding, path, "file is not valid UTF-8"};
    }
    return make_source_unit(path, *lang, std::move(text));
}

}  // namespace commentlint
