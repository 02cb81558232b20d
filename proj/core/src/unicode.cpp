#include "codeintl/unicode.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace codeintl {

namespace {

struct Interval {
  char32_t lo;
  char32_t hi;
};

constexpr Interval kWideIntervals[] = {
#include "east_asian_width.inc"
};

bool in_intervals(char32_t cp, const Interval* begin, const Interval* end) {
  const Interval* it = std::upper_bound(
      begin, end, cp, [](char32_t v, const Interval& iv) { return v < iv.lo; });
  if (it == begin) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}

// Non-ASCII codepoints that must not be read as identifier letters.
constexpr Interval kNonLetterIntervals[] = {
    {0x0080, 0x00A9}, {0x00AB, 0x00B4}, {0x00B6, 0x00B9}, {0x00BB, 0x00BF},
    {0x00D7, 0x00D7}, {0x00F7, 0x00F7}, {0x037E, 0x037E}, {0x0387, 0x0387},
    {0x055A, 0x055F}, {0x0589, 0x058A}, {0x05BE, 0x05BE}, {0x05C0, 0x05C0},
    {0x05C3, 0x05C3}, {0x05C6, 0x05C6}, {0x05F3, 0x05F4}, {0x0600, 0x060F},
    {0x061B, 0x061F}, {0x066A, 0x066D}, {0x06D4, 0x06D4}, {0x0964, 0x0965},
    {0x0970, 0x0970}, {0x2000, 0x206F}, {0x20A0, 0x20CF}, {0x2100, 0x2101},
    {0x2103, 0x2106}, {0x2108, 0x2109}, {0x2114, 0x2114}, {0x2116, 0x2118},
    {0x211E, 0x2123}, {0x2125, 0x2125}, {0x2127, 0x2127}, {0x2129, 0x2129},
    {0x212E, 0x212E}, {0x213A, 0x213B}, {0x2140, 0x2144}, {0x214A, 0x214D},
    {0x214F, 0x215F}, {0x2190, 0x2BFF}, {0x2E00, 0x2E7F}, {0x3000, 0x3004},
    {0x3008, 0x3020}, {0x3030, 0x3030}, {0x303D, 0x303F}, {0x30FB, 0x30FB},
    {0xFD3E, 0xFD3F}, {0xFE10, 0xFE19}, {0xFE30, 0xFE6F}, {0xFEFF, 0xFEFF},
    {0xFF01, 0xFF0F}, {0xFF1A, 0xFF20}, {0xFF3B, 0xFF40}, {0xFF5B, 0xFF65},
    {0xFFF0, 0xFFFF}, {0x1F000, 0x1FAFF},
};

constexpr Interval kNonAsciiDigits[] = {
    {0x0660, 0x0669}, {0x06F0, 0x06F9}, {0x0966, 0x096F}, {0xFF10, 0xFF19},
};

template <std::size_t N>
bool contains(const Interval (&table)[N], char32_t cp) {
  return in_intervals(cp, table, table + N);
}

// Latin Extended-A pairs alternate upper/lower, except where the block
// shifts parity after U+0138 and U+0149.
bool latin_ext_a_upper(char32_t cp) {
  if (cp >= 0x0100 && cp <= 0x0137) return cp % 2 == 0;
  if (cp >= 0x0139 && cp <= 0x0148) return cp % 2 == 1;
  if (cp >= 0x014A && cp <= 0x0177) return cp % 2 == 0;
  if (cp == 0x0178) return true;
  if (cp >= 0x0179 && cp <= 0x017E) return cp % 2 == 1;
  return false;
}

bool latin_ext_a_lower(char32_t cp) {
  if (cp >= 0x0100 && cp <= 0x0137) return cp % 2 == 1;
  if (cp >= 0x0139 && cp <= 0x0148) return cp % 2 == 0;
  if (cp >= 0x014A && cp <= 0x0177) return cp % 2 == 1;
  if (cp >= 0x0179 && cp <= 0x017E) return cp % 2 == 0;
  return cp == 0x017F || cp == 0x0138 || cp == 0x0149;
}

}  // namespace

std::optional<char32_t> decode_utf8(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) return std::nullopt;
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return static_cast<char32_t>(lead);
  }
  std::size_t length = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    cp = lead & 0x1F;
    min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    cp = lead & 0x0F;
    min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    cp = lead & 0x07;
    min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (pos + length > text.size()) return std::nullopt;
  for (std::size_t i = 1; i < length; ++i) {
    unsigned char next = byte(pos + i);
    if ((next & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (next & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return std::nullopt;
  }
  pos += length;
  return cp;
}

std::u32string to_utf32(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (auto cp = decode_utf8(text, pos)) {
      out.push_back(*cp);
    } else {
      out.push_back(U'�');
      ++pos;
    }
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!decode_utf8(text, pos)) return false;
  }
  return true;
}

bool is_ascii(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
}

int codepoint_width(char32_t cp) {
  if (cp == U'\t') return 1;
  if (cp < 0x20 || (cp >= 0x7F && cp < 0xA0)) return 0;
  return contains(kWideIntervals, cp) ? 2 : 1;
}

int display_width(std::string_view text) {
  int width = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto cp = decode_utf8(text, pos);
    if (!cp) {
      ++pos;
      ++width;
      continue;
    }
    width += codepoint_width(*cp);
  }
  return width;
}

UnicodeScript script_of(char32_t cp) {
  if (cp < 0x80) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) {
      return UnicodeScript::Latin;
    }
    return UnicodeScript::Common;
  }
  if (cp == 0xAA || cp == 0xBA) return UnicodeScript::Latin;
  if (cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7) {
    return UnicodeScript::Latin;
  }
  if (cp >= 0x1E00 && cp <= 0x1EFF) return UnicodeScript::Latin;
  if ((cp >= 0xFF21 && cp <= 0xFF3A) || (cp >= 0xFF41 && cp <= 0xFF5A)) {
    return UnicodeScript::Latin;
  }
  if (cp >= 0x0370 && cp <= 0x03FF && cp != 0x037E && cp != 0x0387) {
    return UnicodeScript::Greek;
  }
  if (cp >= 0x0400 && cp <= 0x052F) return UnicodeScript::Cyrillic;
  if (cp >= 0x0591 && cp <= 0x05F2) {
    if (cp == 0x05BE || cp == 0x05C0 || cp == 0x05C3 || cp == 0x05C6) {
      return UnicodeScript::Common;
    }
    return UnicodeScript::Hebrew;
  }
  if (cp >= 0xFB1D && cp <= 0xFB4F) return UnicodeScript::Hebrew;
  if ((cp >= 0x0610 && cp <= 0x061A) || (cp >= 0x0620 && cp <= 0x065F) ||
      (cp >= 0x066E && cp <= 0x06D3) || (cp >= 0x06D5 && cp <= 0x06FF) ||
      (cp >= 0x0750 && cp <= 0x077F) || (cp >= 0x08A0 && cp <= 0x08FF) ||
      (cp >= 0xFB50 && cp <= 0xFDFF && cp != 0xFD3E && cp != 0xFD3F) ||
      (cp >= 0xFE70 && cp <= 0xFEFC)) {
    return UnicodeScript::Arabic;
  }
  if ((cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
      (cp >= 0xF900 && cp <= 0xFAFF) || (cp >= 0x20000 && cp <= 0x2FFFF) ||
      (cp >= 0x3005 && cp <= 0x3007) || cp == 0x3021 || cp == 0x303B) {
    return UnicodeScript::Han;
  }
  if (cp >= 0x3041 && cp <= 0x309F) return UnicodeScript::Hiragana;
  if ((cp >= 0x30A0 && cp <= 0x30FF && cp != 0x30FB) ||
      (cp >= 0x31F0 && cp <= 0x31FF) || (cp >= 0xFF66 && cp <= 0xFF9F)) {
    return UnicodeScript::Katakana;
  }
  if ((cp >= 0xAC00 && cp <= 0xD7AF) || (cp >= 0x1100 && cp <= 0x11FF) ||
      (cp >= 0x3130 && cp <= 0x318F)) {
    return UnicodeScript::Hangul;
  }
  if (contains(kNonLetterIntervals, cp) || contains(kNonAsciiDigits, cp) ||
      is_space(cp)) {
    return UnicodeScript::Common;
  }
  return UnicodeScript::Other;
}

bool is_cjk(char32_t cp) {
  switch (script_of(cp)) {
    case UnicodeScript::Han:
    case UnicodeScript::Hiragana:
    case UnicodeScript::Katakana:
    case UnicodeScript::Hangul:
      return true;
    default:
      return false;
  }
}

bool is_digit(char32_t cp) {
  return (cp >= '0' && cp <= '9') || contains(kNonAsciiDigits, cp);
}

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\f' || cp == '\v' || cp == 0xA0 ||
         cp == 0x3000 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F ||
         cp == 0x205F || cp == 0x1680;
}

bool is_identifier_start(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || cp == '_' ||
           cp == '$';
  }
  if (is_space(cp) || contains(kNonLetterIntervals, cp) ||
      contains(kNonAsciiDigits, cp)) {
    return false;
  }
  return true;
}

bool is_identifier_part(char32_t cp) {
  if (cp < 0x80) return is_identifier_start(cp) || (cp >= '0' && cp <= '9');
  // Zero-width joiners are legal inside Java identifiers.
  if (cp == 0x200C || cp == 0x200D) return true;
  return is_identifier_start(cp) || contains(kNonAsciiDigits, cp);
}

bool is_upper(char32_t cp) {
  if (cp < 0x80) return cp >= 'A' && cp <= 'Z';
  if (cp >= 0xC0 && cp <= 0xDE) return cp != 0xD7;
  if (cp >= 0x100 && cp <= 0x17F) return latin_ext_a_upper(cp);
  if (cp >= 0x391 && cp <= 0x3AB) return cp != 0x3A2;
  if (cp >= 0x400 && cp <= 0x42F) return true;
  return false;
}

bool is_lower(char32_t cp) {
  if (cp < 0x80) return cp >= 'a' && cp <= 'z';
  if (cp >= 0xDF && cp <= 0xFF) return cp != 0xF7;
  if (cp == 0xB5) return true;
  if (cp >= 0x100 && cp <= 0x17F) return latin_ext_a_lower(cp);
  if (cp >= 0x3AC && cp <= 0x3CE) return true;
  if (cp >= 0x430 && cp <= 0x45F) return true;
  return false;
}

bool is_cased(char32_t cp) { return is_upper(cp) || is_lower(cp); }

char32_t to_upper(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 32;
  if (cp < 0x80) return cp;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 32;
  if (cp == 0xFF) return 0x178;
  if (cp >= 0x100 && cp <= 0x17F && latin_ext_a_lower(cp)) {
    if (cp == 0x17F || cp == 0x138 || cp == 0x149) return cp;
    return cp - 1;
  }
  if (cp >= 0x3B1 && cp <= 0x3CB && cp != 0x3C2) return cp - 32;
  if (cp == 0x3C2) return 0x3A3;
  if (cp >= 0x430 && cp <= 0x44F) return cp - 32;
  if (cp >= 0x450 && cp <= 0x45F) return cp - 80;
  return cp;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp < 0x80) return cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x100 && cp <= 0x17F && latin_ext_a_upper(cp)) return cp + 1;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  return cp;
}

std::string lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : to_utf32(text)) append_utf8(out, to_lower(cp));
  return out;
}

std::string uppercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : to_utf32(text)) append_utf8(out, to_upper(cp));
  return out;
}

std::string capitalize(std::string_view text) {
  std::u32string cps = to_utf32(text);
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    append_utf8(out, i == 0 ? to_upper(cps[i]) : to_lower(cps[i]));
  }
  return out;
}

}  // namespace codeintl
