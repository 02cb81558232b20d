#include "codeintl/identifiers.hpp"

#include <algorithm>

#include "codeintl/errors.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

namespace {

bool is_uncased_letter(char32_t cp) {
  return !is_cased(cp) && !is_digit(cp) && cp != '_' && cp != '$' &&
         is_identifier_part(cp);
}

bool has_upper(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), [](char32_t c) { return is_upper(c); });
}

bool has_lower(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), [](char32_t c) { return is_lower(c); });
}

bool is_acronym_word(std::u32string_view word) {
  int upper = 0;
  for (char32_t c : word) {
    if (is_lower(c)) return false;
    if (is_upper(c)) ++upper;
  }
  return upper >= 2;
}

std::vector<std::u32string> split_words(std::u32string_view core) {
  std::vector<std::u32string> words;
  std::u32string current;
  for (std::size_t i = 0; i < core.size(); ++i) {
    char32_t c = core[i];
    bool boundary = false;
    if (i > 0 && !current.empty()) {
      char32_t prev = core[i - 1];
      if (is_upper(c)) {
        if (is_lower(prev) || is_digit(prev) || is_uncased_letter(prev)) {
          boundary = true;
        } else if (is_upper(prev) && i + 1 < core.size() &&
                   is_lower(core[i + 1])) {
          boundary = true;
        }
      } else if (is_uncased_letter(c) && is_cased(prev)) {
        boundary = true;
      }
    }
    if (boundary) {
      words.push_back(std::move(current));
      current.clear();
    }
    current.push_back(c);
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> split_translated(
    std::span<const std::string> translated) {
  std::vector<std::string> words;
  for (const auto& piece : translated) {
    std::u32string current;
    for (char32_t c : to_utf32(piece)) {
      if (c == ' ' || c == '-' || c == '\'' || c == 0x2019 || c == '\t' ||
          c == 0x3000) {
        if (!current.empty()) words.push_back(to_utf8(current));
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    if (!current.empty()) words.push_back(to_utf8(current));
  }
  return words;
}

void validate_word(const std::string& word, ProgrammingLanguage lang) {
  for (char32_t c : to_utf32(word)) {
    bool ok = is_identifier_part(c) &&
              !(lang == ProgrammingLanguage::Python && c == '$');
    if (!ok) {
      throw InvalidSegment("segment '" + word +
                           "' contains a character not allowed in " +
                           std::string(to_string(lang)) + " identifiers");
    }
  }
}

}  // namespace

std::string_view to_string(CasingConvention convention) {
  switch (convention) {
    case CasingConvention::CamelCase: return "CamelCase";
    case CasingConvention::PascalCase: return "PascalCase";
    case CasingConvention::UpperSnake: return "UpperSnake";
    case CasingConvention::LowerSnake: return "LowerSnake";
    case CasingConvention::Flat: return "Flat";
    case CasingConvention::Other: return "Other";
  }
  return "?";
}

SegmentedIdentifier segment(std::string_view identifier) {
  SegmentedIdentifier seg;
  std::u32string cps = to_utf32(identifier);
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && cps[begin] == '_') ++begin;
  while (end > begin && cps[end - 1] == '_') --end;
  seg.leading_underscores = static_cast<int>(begin);
  seg.trailing_underscores = static_cast<int>(cps.size() - end);
  std::u32string_view core(cps.data() + begin, end - begin);

  auto as_other = [&] {
    seg.convention = CasingConvention::Other;
    seg.segments = {to_utf8(core)};
    seg.acronym = {false};
    return seg;
  };

  if (core.empty()) {
    seg.convention = CasingConvention::Other;
    return seg;
  }
  if (core.find(U'$') != std::u32string_view::npos) return as_other();

  if (core.find(U'_') != std::u32string_view::npos) {
    std::vector<std::u32string_view> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t cut = core.find(U'_', start);
      parts.push_back(core.substr(start, cut - start));
      if (cut == std::u32string_view::npos) break;
      start = cut + 1;
    }
    bool any_empty = std::any_of(parts.begin(), parts.end(),
                                 [](auto p) { return p.empty(); });
    if (any_empty) return as_other();
    bool lower = std::any_of(parts.begin(), parts.end(), has_lower);
    bool upper = std::any_of(parts.begin(), parts.end(), has_upper);
    if (upper && lower) return as_other();
    seg.convention =
        upper ? CasingConvention::UpperSnake : CasingConvention::LowerSnake;
    for (auto part : parts) {
      seg.segments.push_back(lowercase(to_utf8(part)));
      seg.acronym.push_back(false);
    }
    return seg;
  }

  if (has_upper(core) && !has_lower(core)) {
    seg.convention = CasingConvention::UpperSnake;
    seg.segments = {lowercase(to_utf8(core))};
    seg.acronym = {false};
    return seg;
  }

  std::vector<std::u32string> words = split_words(core);
  for (const auto& word : words) {
    seg.segments.push_back(lowercase(to_utf8(word)));
    seg.acronym.push_back(is_acronym_word(word));
  }
  if (words.size() == 1 && !has_upper(core)) {
    seg.convention = CasingConvention::Flat;
  } else if (is_upper(core.front())) {
    seg.convention = CasingConvention::PascalCase;
  } else {
    seg.convention = CasingConvention::CamelCase;
  }
  return seg;
}

std::string recombine(const SegmentedIdentifier& seg,
                      std::span<const std::string> translated_segments,
                      ProgrammingLanguage lang) {
  std::vector<std::string> words = split_translated(translated_segments);
  if (words.empty()) throw InvalidSegment("no translated segments");
  for (const auto& w : words) validate_word(w, lang);

  bool identity = words.size() == seg.segments.size() &&
                  std::equal(words.begin(), words.end(), seg.segments.begin());
  auto acronym = [&](std::size_t i) {
    return identity && i < seg.acronym.size() && seg.acronym[i];
  };

  CasingConvention convention = seg.convention;
  if (convention == CasingConvention::Flat && words.size() > 1) {
    convention = lang == ProgrammingLanguage::Python
                     ? CasingConvention::LowerSnake
                     : CasingConvention::CamelCase;
  }

  std::string core;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    switch (convention) {
      case CasingConvention::CamelCase:
        if (i == 0) {
          core += lowercase(w);
        } else {
          core += acronym(i) ? uppercase(w) : capitalize(w);
        }
        break;
      case CasingConvention::PascalCase:
        core += acronym(i) ? uppercase(w) : capitalize(w);
        break;
      case CasingConvention::UpperSnake:
        if (i > 0) core += '_';
        core += uppercase(w);
        break;
      case CasingConvention::LowerSnake:
        if (i > 0) core += '_';
        core += lowercase(w);
        break;
      case CasingConvention::Flat:
        core += lowercase(w);
        break;
      case CasingConvention::Other:
        if (i > 0) core += '_';
        core += w;
        break;
    }
  }

  std::string out(static_cast<std::size_t>(seg.leading_underscores), '_');
  out += core;
  out.append(static_cast<std::size_t>(seg.trailing_underscores), '_');
  std::size_t pos = 0;
  auto first = decode_utf8(out, pos);
  if (!first || !is_identifier_start(*first) ||
      (lang == ProgrammingLanguage::Python && *first == '$')) {
    throw InvalidSegment("'" + out + "' does not start like an identifier");
  }
  return out;
}

std::string phrase_of(const SegmentedIdentifier& seg) {
  std::string out;
  for (std::size_t i = 0; i < seg.segments.size(); ++i) {
    if (i > 0) out += ' ';
    out += seg.segments[i];
  }
  return out;
}

}  // namespace codeintl
