#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codeintl {

/// Decodes one UTF-8 sequence starting at `pos`. Returns the codepoint and
/// advances `pos`, or std::nullopt on a malformed or truncated sequence
/// (overlongs and surrogates are rejected).
std::optional<char32_t> decode_utf8(std::string_view text, std::size_t& pos);

/// Decodes the whole string; malformed bytes become U+FFFD.
std::u32string to_utf32(std::string_view text);

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(std::u32string_view text);

bool is_valid_utf8(std::string_view text);
bool is_ascii(std::string_view text);

/// Terminal cell width of one codepoint: 2 for East Asian Wide/Fullwidth,
/// 0 for C0/C1 controls other than tab, 1 otherwise.
int codepoint_width(char32_t cp);

/// CJK-aware display width of a UTF-8 string.
int display_width(std::string_view text);

/// Unicode writing systems the tool distinguishes. `Common` covers digits,
/// punctuation, whitespace and symbols that belong to no particular script.
enum class UnicodeScript {
  Common,
  Latin,
  Cyrillic,
  Greek,
  Arabic,
  Hebrew,
  Han,
  Hiragana,
  Katakana,
  Hangul,
  Other,
};

UnicodeScript script_of(char32_t cp);

/// Han, kana and Hangul: scripts written without spaces between words.
bool is_cjk(char32_t cp);

/// Letters that may appear in Java and Python identifiers. Non-ASCII
/// codepoints are treated as letters unless they are known punctuation,
/// symbols or whitespace.
bool is_identifier_start(char32_t cp);
bool is_identifier_part(char32_t cp);

/// Simple (one-to-one) case mapping for ASCII, Latin-1, Latin Extended-A,
/// Greek and Cyrillic. Everything else is uncased.
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
bool is_cased(char32_t cp);
char32_t to_upper(char32_t cp);
char32_t to_lower(char32_t cp);

std::string lowercase(std::string_view text);
std::string uppercase(std::string_view text);
/// Uppercases the first codepoint and lowercases the rest.
std::string capitalize(std::string_view text);

bool is_digit(char32_t cp);
bool is_space(char32_t cp);

}  // namespace codeintl
