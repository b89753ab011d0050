// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace commentlint {

enum class Language { Java, Python };

const char* to_string(Language lang);

/// Resolves a language from a file extension (".java", ".py").
std::optional<Language> language_from_extension(const std::filesystem::path& path);

/// One decoded source file plus an offset -> line lookup table.
struct SourceUnit {
    std::filesystem::path path;
    Language language = Language::Java;
    std::string text;                       // UTF-8, line endings normalized to \n
    std::vector<std::size_t> line_starts;   // offset of each line start, line_starts[0] == 0

    /// 1-based line number of the character at `offset`.
    int line_of(std::size_t offset) const;
};

enum class DecodeErrorKind { Io, Encoding, UnknownLanguage };

struct DecodeError {
    DecodeErrorKind kind = DecodeErrorKind::Io;
    std::filesystem::path path;
    std::string message;
};

using DecodeResult = std::variant<SourceUnit, DecodeError>;

/// Reads and decodes one file. The language comes from `hint` when given,
/// otherwise from the file extension. Decoding failures are reported per
/// file so a corpus run can continue past them.
DecodeResult decode_source(const std::filesystem::path& path,
                           std::optional<Language> hint = std::nullopt);

/// Builds a SourceUnit from in-memory text (used by tests and the library
/// API). Normalizes line endings and indexes line starts.
SourceUnit make_source_unit(std::filesystem::path path, Language language, std::string text);

/// True when `text` is well-formed UTF-8.
bool is_valid_utf8(std::string_view text);

}  // namespace commentlint
