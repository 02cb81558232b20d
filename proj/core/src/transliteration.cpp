#include "codeintl/transliteration.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>

#include "codeintl/errors.hpp"
#include "codeintl/unicode.hpp"

#ifndef CODEINTL_DEFAULT_DATA_DIR
#define CODEINTL_DEFAULT_DATA_DIR "data"
#endif

namespace codeintl {

namespace {

std::string_view table_name(Script script) {
  switch (script) {
    case Script::Arabic: return "arabic";
    case Script::Hebrew: return "hebrew";
    case Script::Chinese: return "chinese";
    case Script::Japanese: return "japanese";
    case Script::Korean: return "korean";
    case Script::Russian: return "russian";
    default: return {};
  }
}

struct Fold {
  char32_t from;
  const char* to;
};

// Punctuation that has an obvious ASCII counterpart.
constexpr Fold kPunctuation[] = {
    {0x3000, " "}, {0x3001, ","}, {0x3002, "."}, {0x300C, "\""},
    {0x300D, "\""}, {0x300E, "\""}, {0x300F, "\""}, {0x3008, "<"},
    {0x3009, ">"}, {0x300A, "<<"}, {0x300B, ">>"}, {0x3010, "["},
    {0x3011, "]"}, {0x3014, "("}, {0x3015, ")"}, {0x30FB, "."},
    {0x060C, ","}, {0x061B, ";"}, {0x061F, "?"}, {0x066A, "%"},
    {0x066B, "."}, {0x066C, ","}, {0x06D4, "."}, {0x05BE, "-"},
    {0x05F3, "'"}, {0x05F4, "\""}, {0x00A0, " "}, {0x2018, "'"},
    {0x2019, "'"}, {0x201C, "\""}, {0x201D, "\""}, {0x2013, "-"},
    {0x2014, "-"}, {0x2026, "..."}, {0x00AB, "<<"}, {0x00BB, ">>"},
    {0x00B7, "."}, {0x2022, "*"},
};

// Latin letters with diacritics, folded to their base letter.
constexpr std::string_view kLatinFrom =
    "ÀÁÂÃÄÅàáâãäåĀāĂăĄąÇçĆćĈĉĊċČčĎďĐđÈÉÊËèéêëĒēĔĕĖėĘęĚěĜĝĞğĠġĢģĤĥĦħ"
    "ÌÍÎÏìíîïĨĩĪīĬĭĮįİıĴĵĶķĹĺĻļĽľĿŀŁłÑñŃńŅņŇňÒÓÔÕÖØòóôõöøŌōŎŏŐőŔŕŖŗŘř"
    "ŚśŜŝŞşŠšŢţŤťŦŧÙÚÛÜùúûüŨũŪūŬŭŮůŰűŲųŴŵÝýÿŶŷŸŹźŻżŽž";
constexpr std::string_view kLatinTo =
    "AAAAAAaaaaaaAaAaAaCcCcCcCcCcDdDdEEEEeeeeEeEeEeEeEeGgGgGgGgHhHh"
    "IIIIiiiiIiIiIiIiIiJjKkLlLlLlLlLlNnNnNnNnOOOOOOooooooOoOoOoRrRrRr"
    "SsSsSsSsTtTtTtUUUUuuuuUuUuUuUuUuUuWwYyyYyYZzZzZz";

const char* fold_punctuation(char32_t cp) {
  for (const auto& f : kPunctuation) {
    if (f.from == cp) return f.to;
  }
  return nullptr;
}

std::string fold_special(char32_t cp) {
  switch (cp) {
    case U'ß': return "ss";
    case U'Æ': return "AE";
    case U'æ': return "ae";
    case U'Œ': return "OE";
    case U'œ': return "oe";
    case U'Þ': return "Th";
    case U'þ': return "th";
    case U'Ð': return "D";
    case U'ð': return "d";
    default: return {};
  }
}

char fold_latin(char32_t cp) {
  static const std::u32string from = to_utf32(kLatinFrom);
  auto at = from.find(cp);
  if (at == std::u32string::npos || at >= kLatinTo.size()) return 0;
  return kLatinTo[at];
}

}  // namespace

std::string_view to_string(Script script) {
  switch (script) {
    case Script::None: return "None";
    case Script::Latin: return "Latin";
    case Script::Arabic: return "Arabic";
    case Script::Hebrew: return "Hebrew";
    case Script::Chinese: return "Chinese";
    case Script::Japanese: return "Japanese";
    case Script::Korean: return "Korean";
    case Script::Russian: return "Russian";
    case Script::Other: return "Other";
    case Script::Mixed: return "Mixed";
  }
  return "?";
}

bool has_romanization(Script script) { return !table_name(script).empty(); }

bool is_rtl(Script script) {
  return script == Script::Arabic || script == Script::Hebrew;
}

Script detect_script(std::string_view text) {
  enum { kLatin, kArabic, kHebrew, kHan, kKana, kHangul, kCyrillic, kOther, kCount };
  std::array<int, kCount> counts{};
  for (char32_t cp : to_utf32(text)) {
    switch (script_of(cp)) {
      case UnicodeScript::Common: break;
      case UnicodeScript::Latin: ++counts[kLatin]; break;
      case UnicodeScript::Arabic: ++counts[kArabic]; break;
      case UnicodeScript::Hebrew: ++counts[kHebrew]; break;
      case UnicodeScript::Han: ++counts[kHan]; break;
      case UnicodeScript::Hiragana:
      case UnicodeScript::Katakana: ++counts[kKana]; break;
      case UnicodeScript::Hangul: ++counts[kHangul]; break;
      case UnicodeScript::Cyrillic: ++counts[kCyrillic]; break;
      case UnicodeScript::Greek:
      case UnicodeScript::Other: ++counts[kOther]; break;
    }
  }
  if (counts[kKana] > 0) {
    counts[kKana] += counts[kHan];
    counts[kHan] = 0;
  }
  int total = 0;
  for (int c : counts) total += c;
  if (total == 0) return Script::None;

  int above = 0;
  for (int i = kArabic; i < kCount; ++i) {
    if (counts[i] * 5 > total) ++above;
  }
  if (above >= 2) return Script::Mixed;

  static constexpr Script kScripts[kCount] = {
      Script::Latin, Script::Arabic, Script::Hebrew, Script::Chinese,
      Script::Japanese, Script::Korean, Script::Russian, Script::Other};
  int best = 0;
  for (int i = 1; i < kCount; ++i) {
    if (counts[i] > counts[best]) best = i;
  }
  return kScripts[best];
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("CODEINTL_DATA"); env && *env) {
    return env;
  }
  return CODEINTL_DEFAULT_DATA_DIR;
}

RomanizationTable::RomanizationTable(
    Script script, std::unordered_map<std::u32string, std::string> rules)
    : script_(script), rules_(std::move(rules)) {
  for (const auto& [seq, ascii] : rules_) {
    for (char c : ascii) {
      bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                   (c >= '0' && c <= '9');
      if (!alnum) {
        throw ConfigError("romanization rule for '" + to_utf8(seq) +
                          "' is not ASCII alphanumeric: '" + ascii + "'");
      }
    }
    max_length_ = std::max(max_length_, seq.size());
  }
}

RomanizationTable RomanizationTable::load(Script script,
                                          const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read romanization table " + path.string());
  }
  std::unordered_map<std::u32string, std::string> rules;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ConfigError(path.string() + ":" + std::to_string(number) +
                        ": expected sequence<TAB>ascii");
    }
    rules.emplace(to_utf32(line.substr(0, tab)), line.substr(tab + 1));
  }
  return RomanizationTable(script, std::move(rules));
}

std::size_t RomanizationTable::match(std::u32string_view text, std::size_t pos,
                                     const std::string** ascii) const {
  std::size_t longest = std::min(max_length_, text.size() - pos);
  std::u32string key;
  for (std::size_t len = longest; len > 0; --len) {
    key.assign(text.substr(pos, len));
    auto it = rules_.find(key);
    if (it != rules_.end()) {
      if (ascii) *ascii = &it->second;
      return len;
    }
  }
  return 0;
}

Transliterator::Transliterator(std::filesystem::path data_dir)
    : data_dir_(std::move(data_dir)) {}

const RomanizationTable& Transliterator::table(Script script) const {
  auto name = table_name(script);
  if (name.empty()) {
    throw UnsupportedScript("no romanization table for script " +
                            std::string(to_string(script)));
  }
  std::lock_guard lock(mutex_);
  auto& slot = tables_[script];
  if (!slot) {
    auto path = data_dir_ / "translit" / (std::string(name) + ".tsv");
    slot = std::make_unique<RomanizationTable>(
        RomanizationTable::load(script, path));
  }
  return *slot;
}

std::string Transliterator::transliterate(std::string_view text,
                                          Script script) const {
  const RomanizationTable& rules = table(script);
  std::u32string cps = to_utf32(text);
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < cps.size();) {
    char32_t cp = cps[i];
    if (cp < 0x80) {
      out += static_cast<char>(cp);
      ++i;
      continue;
    }
    const std::string* ascii = nullptr;
    if (std::size_t len = rules.match(cps, i, &ascii)) {
      out += *ascii;
      i += len;
      continue;
    }
    ++i;
    if (cp >= 0xFF01 && cp <= 0xFF5E) {
      out += static_cast<char>(cp - 0xFEE0);
    } else if (cp >= 0x0660 && cp <= 0x0669) {
      out += static_cast<char>('0' + (cp - 0x0660));
    } else if (cp >= 0x06F0 && cp <= 0x06F9) {
      out += static_cast<char>('0' + (cp - 0x06F0));
    } else if (const char* p = fold_punctuation(cp)) {
      out += p;
    } else if (char c = fold_latin(cp)) {
      out += c;
    } else if (auto s = fold_special(cp); !s.empty()) {
      out += s;
    } else if (cp >= 0x0300 && cp <= 0x036F) {
      // combining mark, dropped
    } else {
      out += '_';
    }
  }
  return out;
}

std::string Transliterator::transliterate_identifier(
    const SegmentedIdentifier& seg, Script script,
    ProgrammingLanguage lang) const {
  bool ascii = std::all_of(seg.segments.begin(), seg.segments.end(),
                           [](const std::string& s) { return is_ascii(s); });
  if (ascii) return recombine(seg, seg.segments, lang);

  std::vector<std::string> romanized;
  for (const auto& s : seg.segments) {
    std::string r;
    for (char c : transliterate(s, script)) {
      bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_';
      r += keep ? c : '_';
    }
    if (!r.empty()) romanized.push_back(std::move(r));
  }
  if (romanized.empty()) {
    throw InvalidSegment("identifier '" + phrase_of(seg) +
                         "' romanizes to nothing");
  }
  if (romanized.front()[0] >= '0' && romanized.front()[0] <= '9' &&
      seg.leading_underscores == 0) {
    SegmentedIdentifier padded = seg;
    padded.leading_underscores = 1;
    return recombine(padded, romanized, lang);
  }
  return recombine(seg, romanized, lang);
}

const Transliterator& default_transliterator() {
  static Transliterator instance;
  return instance;
}

std::string transliterate(std::string_view text, Script script) {
  return default_transliterator().transliterate(text, script);
}

std::string transliterate_identifier(const SegmentedIdentifier& seg,
                                     Script script, ProgrammingLanguage lang) {
  return default_transliterator().transliterate_identifier(seg, script, lang);
}

}  // namespace codeintl
