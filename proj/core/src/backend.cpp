#include "codeintl/backend.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "codeintl/errors.hpp"
#include "codeintl/transliteration.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

namespace {

/// FNV-1a of the dictionary text, so cached phrases go stale with edits.
std::string fingerprint(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    cols.emplace_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::string normalize_phrase(std::string_view text) {
  std::string out;
  bool space = false;
  for (char32_t cp : to_utf32(lowercase(text))) {
    if (is_space(cp)) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    append_utf8(out, cp);
  }
  return out;
}

bool is_word_char(char32_t cp) {
  return cp != '$' && !is_cjk(cp) && is_identifier_part(cp);
}

bool starts_with_cjk(std::string_view text) {
  std::size_t pos = 0;
  auto cp = decode_utf8(text, pos);
  return cp && is_cjk(*cp);
}

bool ends_with_cjk(std::string_view text) {
  if (text.empty()) return false;
  std::u32string cps = to_utf32(text);
  return is_cjk(cps.back());
}

bool is_blank(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char c) { return c == ' '; });
}

struct Unit {
  enum Kind { Word, Cjk, Placeholder, Sep } kind;
  std::string text;
};

std::vector<Unit> split_units(std::string_view phrase) {
  std::vector<Unit> units;
  std::u32string cps = to_utf32(phrase);
  const char32_t open = 0x27E6;
  const char32_t close = 0x27E7;
  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    std::size_t j = i + 1;
    Unit::Kind kind;
    if (cp == open) {
      std::size_t k = i + 1;
      while (k < cps.size() && cps[k] >= '0' && cps[k] <= '9') ++k;
      if (k > i + 1 && k < cps.size() && cps[k] == close) {
        j = k + 1;
        kind = Unit::Placeholder;
      } else {
        kind = Unit::Sep;
      }
    } else if (is_cjk(cp)) {
      while (j < cps.size() && is_cjk(cps[j])) ++j;
      kind = Unit::Cjk;
    } else if (is_word_char(cp)) {
      while (j < cps.size() && is_word_char(cps[j])) ++j;
      kind = Unit::Word;
    } else {
      while (j < cps.size() && !is_word_char(cps[j]) && !is_cjk(cps[j]) &&
             cps[j] != open) {
        ++j;
      }
      kind = Unit::Sep;
    }
    std::u32string_view piece(cps.data() + i, j - i);
    if (kind == Unit::Sep && !units.empty() && units.back().kind == Unit::Sep) {
      units.back().text += to_utf8(piece);
    } else {
      units.push_back({kind, to_utf8(piece)});
    }
    i = j;
  }
  return units;
}

const DictionaryBackend::Entry& choose(
    const std::vector<DictionaryBackend::Entry>& entries,
    const PartOfSpeechHint& hint, bool first_word) {
  auto find = [&](auto pred) -> const DictionaryBackend::Entry* {
    auto it = std::find_if(entries.begin(), entries.end(), pred);
    return it == entries.end() ? nullptr : &*it;
  };
  if (hint.verb_first && first_word) {
    std::string tense(to_string(hint.tense));
    if (auto e = find([&](const auto& e) {
          return e.pos == "verb" && e.tense == tense;
        })) {
      return *e;
    }
    if (auto e = find([](const auto& e) { return e.pos == "verb"; })) return *e;
  }
  if (auto e = find([](const auto& e) { return e.pos.empty(); })) return *e;
  if (auto e = find([](const auto& e) { return e.pos == "noun"; })) return *e;
  return entries.front();
}

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string match_case(const std::string& source, const std::string& target) {
  std::size_t pos = 0;
  auto first = decode_utf8(source, pos);
  if (!first || !is_upper(*first) || target.empty()) return target;
  std::u32string rest = to_utf32(source.substr(pos));
  bool acronym = !rest.empty() && std::none_of(rest.begin(), rest.end(),
                                               [](char32_t c) { return is_lower(c); });
  if (acronym) return target;
  std::u32string t = to_utf32(target);
  t[0] = to_upper(t[0]);
  return to_utf8(t);
}

}  // namespace

std::string_view to_string(Tense tense) {
  switch (tense) {
    case Tense::Imperative: return "imperative";
    case Tense::Infinitive: return "infinitive";
    case Tense::ThirdPersonPresent: return "third";
  }
  return "?";
}

std::string PartOfSpeechHint::key() const {
  if (!verb_first) return "none";
  return "verb:" + std::string(to_string(tense));
}

PartOfSpeechHint PartOfSpeechHint::from_key(std::string_view key) {
  if (key == "verb:imperative") return verb(Tense::Imperative);
  if (key == "verb:infinitive") return verb(Tense::Infinitive);
  if (key == "verb:third") return verb(Tense::ThirdPersonPresent);
  return none();
}

std::string primary_subtag(std::string_view bcp47) {
  auto cut = bcp47.find_first_of("-_");
  return lowercase(bcp47.substr(0, cut));
}

std::string placeholder(std::size_t index) {
  return std::string(kPlaceholderOpen) + std::to_string(index) +
         std::string(kPlaceholderClose);
}

std::vector<PhraseTranslation> TranslationBackend::translate_batch(
    std::span<const std::string> phrases, const std::string& from,
    const std::string& to, const PartOfSpeechHint& hint) {
  std::vector<PhraseTranslation> out;
  out.reserve(phrases.size());
  for (const auto& p : phrases) out.push_back(translate_phrase(p, from, to, hint));
  return out;
}

PhraseTranslation IdentityBackend::translate_phrase(const std::string& phrase,
                                                    const std::string&,
                                                    const std::string&,
                                                    const PartOfSpeechHint&) {
  return {phrase, 1.0};
}

LanguageGuess IdentityBackend::detect_language(std::string_view) {
  return {"und", 0.0};
}

DictionaryBackend::DictionaryBackend(const std::filesystem::path& path)
    : id_("dict:" + path.filename().string()) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read dictionary " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string rows = buf.str();
  id_ += "@" + fingerprint(rows);
  parse(rows);
}

DictionaryBackend::DictionaryBackend(std::string id, std::string_view rows)
    : id_(std::move(id) + "@" + fingerprint(rows)) {
  parse(rows);
}

DictionaryBackend DictionaryBackend::from_string(std::string_view rows,
                                                 std::string name) {
  return DictionaryBackend("dict:" + name, rows);
}

void DictionaryBackend::parse(std::string_view rows) {
  std::size_t start = 0;
  int number = 0;
  while (start <= rows.size()) {
    auto nl = rows.find('\n', start);
    std::string_view line = rows.substr(start, nl - start);
    start = nl == std::string_view::npos ? rows.size() + 1 : nl + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() < 4) {
      throw ConfigError("dictionary line " + std::to_string(number) +
                        ": expected from, to, source, target");
    }
    Entry entry{cols[3], cols.size() > 4 ? cols[4] : "",
                cols.size() > 5 ? cols[5] : ""};
    add(primary_subtag(cols[0]), primary_subtag(cols[1]), cols[2],
        std::move(entry));
  }
}

void DictionaryBackend::add(const std::string& from, const std::string& to,
                            const std::string& source, Entry entry) {
  auto index = [](Pair& pair, const std::string& key, Entry e) {
    std::size_t words = 1 + std::count(key.begin(), key.end(), ' ');
    pair.max_words = std::max(pair.max_words, words);
    pair.max_chars = std::max(pair.max_chars, to_utf32(key).size());
    pair.phrases[key].push_back(std::move(e));
  };
  auto remember = [&](const std::string& lang, const std::string& phrase) {
    if (detect_script(phrase) != Script::Latin) return;
    std::istringstream words(phrase);
    for (std::string w; words >> w;) vocabulary_[lang][w] = 1;
  };

  std::string key = normalize_phrase(source);
  if (key.empty()) return;
  std::string target_key = normalize_phrase(entry.target);
  remember(from, key);
  remember(to, target_key);
  if (!target_key.empty()) {
    index(reversed_[to + "\t" + from], target_key,
          Entry{source, entry.pos, entry.tense});
  }
  index(pairs_[from + "\t" + to], key, std::move(entry));
}

const DictionaryBackend::Pair* DictionaryBackend::pair_for(
    const std::string& from, const std::string& to) const {
  std::string k = primary_subtag(from) + "\t" + primary_subtag(to);
  if (auto it = pairs_.find(k); it != pairs_.end()) return &it->second;
  if (auto it = reversed_.find(k); it != reversed_.end()) return &it->second;
  return nullptr;
}

bool DictionaryBackend::has_pair(const std::string& from,
                                 const std::string& to) const {
  return pair_for(from, to) != nullptr;
}

const std::vector<DictionaryBackend::Entry>* DictionaryBackend::lookup(
    const std::string& from, const std::string& to,
    const std::string& source) const {
  const Pair* pair = pair_for(from, to);
  if (!pair) return nullptr;
  auto it = pair->phrases.find(normalize_phrase(source));
  return it == pair->phrases.end() ? nullptr : &it->second;
}

PhraseTranslation DictionaryBackend::translate_phrase(
    const std::string& phrase, const std::string& from, const std::string& to,
    const PartOfSpeechHint& hint) {
  if (primary_subtag(from) == primary_subtag(to)) return {phrase, 1.0};
  const Pair* pair = pair_for(from, to);
  std::vector<Unit> units = split_units(phrase);

  struct Piece {
    std::string text;
    bool sep;
    bool dropped;
    bool from_cjk = false;
  };
  std::vector<Piece> pieces;
  int known = 0;
  int unknown = 0;
  bool first_word = true;

  auto lookup_key = [&](const std::string& key) -> const std::vector<Entry>* {
    if (!pair) return nullptr;
    auto it = pair->phrases.find(key);
    return it == pair->phrases.end() ? nullptr : &it->second;
  };

  for (std::size_t i = 0; i < units.size();) {
    const Unit& u = units[i];
    if (u.kind == Unit::Sep || u.kind == Unit::Placeholder) {
      pieces.push_back({u.text, u.kind == Unit::Sep, false});
      ++i;
      continue;
    }
    if (u.kind == Unit::Word) {
      if (all_digits(u.text)) {
        pieces.push_back({u.text, false, false});
        first_word = false;
        ++i;
        continue;
      }
      std::size_t max_words = pair ? pair->max_words : 1;
      std::string key;
      const std::vector<Entry>* best = nullptr;
      std::size_t best_end = i + 1;
      std::size_t words = 0;
      for (std::size_t j = i; j < units.size() && words < max_words; j += 2) {
        if (units[j].kind != Unit::Word) break;
        if (j > i) {
          if (units[j - 1].text != " ") break;
          key += ' ';
        }
        key += lowercase(units[j].text);
        ++words;
        if (auto e = lookup_key(key)) {
          best = e;
          best_end = j + 1;
        }
      }
      if (best) {
        const Entry& e = choose(*best, hint, first_word);
        pieces.push_back({match_case(u.text, e.target), false, e.target.empty()});
        known += static_cast<int>((best_end - i + 1) / 2);
        i = best_end;
      } else {
        pieces.push_back({u.text, false, false});
        ++unknown;
        ++i;
      }
      first_word = false;
      continue;
    }
    // CJK run: longest dictionary prefix at each position.
    std::u32string run = to_utf32(u.text);
    std::size_t max_chars = pair ? pair->max_chars : 1;
    for (std::size_t p = 0; p < run.size();) {
      std::size_t len = std::min(max_chars, run.size() - p);
      const std::vector<Entry>* found = nullptr;
      for (; len > 0; --len) {
        if ((found = lookup_key(to_utf8(run.substr(p, len))))) break;
      }
      if (found) {
        const Entry& e = choose(*found, hint, first_word);
        pieces.push_back({e.target, false, e.target.empty(), true});
        ++known;
        p += len;
      } else {
        pieces.push_back({to_utf8(run.substr(p, 1)), false, false, true});
        ++unknown;
        ++p;
      }
      first_word = false;
    }
    ++i;
  }

  // Dropped words take one neighbouring blank with them.
  std::vector<Piece> kept;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].dropped) {
      kept.push_back(pieces[i]);
      continue;
    }
    if (i + 1 < pieces.size() && pieces[i + 1].sep && is_blank(pieces[i + 1].text)) {
      ++i;
    } else if (!kept.empty() && kept.back().sep && is_blank(kept.back().text)) {
      kept.pop_back();
    }
  }

  std::string out;
  const Piece* prev = nullptr;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const Piece& p = kept[i];
    if (p.sep) {
      const Piece* next = i + 1 < kept.size() ? &kept[i + 1] : nullptr;
      bool cjk_gap = is_blank(p.text) && prev && next && !next->sep &&
                     ends_with_cjk(prev->text) && starts_with_cjk(next->text);
      if (!cjk_gap) out += p.text;
      prev = &p;
      continue;
    }
    if (prev && !prev->sep && (prev->from_cjk || p.from_cjk) &&
        !ends_with_cjk(prev->text) &&
        !starts_with_cjk(p.text) && !prev->text.empty() && !p.text.empty()) {
      out += ' ';
    }
    out += p.text;
    prev = &p;
  }
  int total = known + unknown;
  double confidence = total == 0 ? 1.0 : static_cast<double>(known) / total;
  return {out, confidence};
}

LanguageGuess DictionaryBackend::detect_language(std::string_view text) {
  int letters = 0;
  std::map<std::string, int> by_script;
  bool kana = false;
  for (char32_t cp : to_utf32(text)) {
    std::string lang;
    switch (script_of(cp)) {
      case UnicodeScript::Common: continue;
      case UnicodeScript::Latin: lang = "latin"; break;
      case UnicodeScript::Han: lang = "zh"; break;
      case UnicodeScript::Hiragana:
      case UnicodeScript::Katakana: lang = "ja"; kana = true; break;
      case UnicodeScript::Hangul: lang = "ko"; break;
      case UnicodeScript::Arabic: lang = "ar"; break;
      case UnicodeScript::Hebrew: lang = "he"; break;
      case UnicodeScript::Cyrillic: lang = "ru"; break;
      case UnicodeScript::Greek: lang = "el"; break;
      case UnicodeScript::Other: lang = "und"; break;
    }
    ++letters;
    ++by_script[lang];
  }
  if (letters == 0) return {"und", 0.0};
  if (kana) {
    by_script["ja"] += by_script["zh"];
    by_script.erase("zh");
  }
  auto top = std::max_element(
      by_script.begin(), by_script.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  if (top->first != "latin") {
    return {top->first, static_cast<double>(top->second) / letters};
  }

  std::vector<std::string> words;
  for (const auto& u : split_units(text)) {
    if (u.kind == Unit::Word && !all_digits(u.text)) {
      words.push_back(lowercase(u.text));
    }
  }
  if (words.empty()) return {"und", 0.0};
  std::string best = "und";
  int best_hits = 0;
  for (const auto& [lang, vocab] : vocabulary_) {
    int hits = 0;
    for (const auto& w : words) hits += vocab.count(w) ? 1 : 0;
    if (hits > best_hits) {
      best_hits = hits;
      best = lang;
    }
  }
  double latin_share = static_cast<double>(top->second) / letters;
  return {best, latin_share * best_hits / static_cast<double>(words.size())};
}

std::filesystem::path default_dictionary_path() {
  return data_directory() / "dict" / "codeintl.tsv";
}

std::shared_ptr<TranslationBackend> make_backend(std::string_view spec) {
  if (spec == "identity") return std::make_shared<IdentityBackend>();
  if (spec.rfind("dict:", 0) == 0) {
    std::filesystem::path path(spec.substr(5));
    if (path.empty()) path = default_dictionary_path();
    return std::make_shared<DictionaryBackend>(path);
  }
  if (spec == "dict") {
    return std::make_shared<DictionaryBackend>(default_dictionary_path());
  }
  if (spec.rfind("service:", 0) == 0) {
    return std::make_shared<ServiceBackend>(std::string(spec.substr(8)));
  }
  throw ConfigError("unknown backend '" + std::string(spec) +
                    "' (expected dict:<path>, service:<url> or identity)");
}

}  // namespace codeintl
