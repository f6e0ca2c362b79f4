#pragma once

#include <string>
#include <string_view>

namespace bigram_wsd::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes one code point starting at `pos` and advances it. Malformed or
/// overlong sequences and surrogates decode as U+FFFD, consuming one byte.
char32_t decode_next(std::string_view text, std::size_t& pos) noexcept;

void append_utf8(std::string& out, char32_t cp);

bool is_whitespace(char32_t cp) noexcept;

/// Simple (one-to-one) lowercase mapping for Latin, Greek, Cyrillic,
/// Armenian and fullwidth Latin letters; identity elsewhere.
char32_t to_lower(char32_t cp) noexcept;

}  // namespace bigram_wsd::unicode
