#include "codeintl/translator.hpp"

#include <algorithm>
#include <map>

#include "codeintl/errors.hpp"
#include "codeintl/transliteration.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

namespace {

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> words;
  std::string current;
  for (char32_t cp : to_utf32(text)) {
    if (is_space(cp) || cp == '-' || cp == '\'' || cp == 0x2019) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      append_utf8(current, cp);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string with_suffix(const std::string& candidate, int n) {
  std::size_t end = candidate.size();
  while (end > 0 && candidate[end - 1] == '_') --end;
  if (end == 0) return candidate + std::to_string(n);
  return candidate.substr(0, end) + std::to_string(n) + candidate.substr(end);
}

/// Words of a translated identifier, used to compare translations. CJK
/// translations have no word boundaries, so their characters stand in.
std::set<std::string> translated_words(const std::string& translation) {
  std::set<std::string> out;
  for (const auto& s : segment(translation).segments) {
    std::u32string cps = to_utf32(s);
    if (std::any_of(cps.begin(), cps.end(), [](char32_t c) { return is_cjk(c); })) {
      for (char32_t c : cps) {
        if (is_cjk(c)) out.insert(to_utf8(std::u32string(1, c)));
      }
    } else {
      out.insert(s);
    }
  }
  return out;
}

bool has_letter(std::u32string_view cps) {
  return std::any_of(cps.begin(), cps.end(), [](char32_t c) {
    return is_identifier_part(c) && !is_digit(c) && c != '_' && c != '$';
  });
}

}  // namespace

std::string_view to_string(IdentifierRole role) {
  switch (role) {
    case IdentifierRole::Method: return "Method";
    case IdentifierRole::Class: return "Class";
    case IdentifierRole::Variable: return "Variable";
    case IdentifierRole::Constant: return "Constant";
  }
  return "?";
}

std::vector<std::string> collect_targets(std::span<const SymbolTable> tables) {
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen;
  for (const auto& table : tables) {
    for (const auto& name : table.declaration_order) {
      if (table.is_defined(name) && seen.insert(name).second) {
        out.push_back(name);
      }
    }
    for (const auto& [name, flags] : table.defined) {
      if (seen.insert(name).second) out.push_back(name);
    }
  }
  return out;
}

bool should_translate(std::string_view identifier) {
  std::u32string cps = to_utf32(identifier);
  std::u32string_view core(cps);
  while (!core.empty() && core.front() == '_') core.remove_prefix(1);
  while (!core.empty() && core.back() == '_') core.remove_suffix(1);
  if (!has_letter(core)) return false;
  if (core.size() == 1) return is_cjk(core.front());
  return true;
}

Tense preferred_tense(std::string_view target_lang) {
  static const std::set<std::string, std::less<>> romance = {
      "es", "pt", "fr", "it", "ro", "ca"};
  return romance.count(primary_subtag(target_lang)) ? Tense::Infinitive
                                                    : Tense::Imperative;
}

IdentifierRole role_of(std::string_view identifier, unsigned decl_flags) {
  if (decl_flags & kDeclType) return IdentifierRole::Class;
  if (decl_flags & kDeclMethod) return IdentifierRole::Method;
  if (segment(identifier).convention == CasingConvention::UpperSnake) {
    return IdentifierRole::Constant;
  }
  return IdentifierRole::Variable;
}

std::string resolve_collision(const std::string& candidate,
                              const TranslationMap& map,
                              ProgrammingLanguage lang,
                              const std::set<std::string, std::less<>>& reserved,
                              std::string_view source) {
  auto taken = [&](const std::string& c) {
    if (is_keyword(c, lang)) return true;
    if (const std::string* owner = map.source_of(c); owner && *owner != source) {
      return true;
    }
    return c != source && reserved.count(c) > 0;
  };
  if (!taken(candidate)) return candidate;
  for (int n = 2;; ++n) {
    std::string next = with_suffix(candidate, n);
    if (!taken(next)) return next;
  }
}

TokenStream apply_renaming(std::span<const SourceToken> tokens,
                           const TranslationMap& map) {
  TokenStream out(tokens.begin(), tokens.end());
  for (auto& tok : out) {
    if (tok.kind != TokenKind::TargetIdentifier) continue;
    if (!should_translate(tok.text)) continue;
    const std::string* to = map.find(tok.text);
    if (!to) {
      throw MissingEntry("no translation for target identifier '" + tok.text +
                         "' at " + std::to_string(tok.line) + ":" +
                         std::to_string(tok.col));
    }
    tok.text = *to;
    tok.width = display_width(tok.text);
  }
  return out;
}

IdentifierTranslator::IdentifierTranslator(
    const TranslationJob& job, TranslationMap& map, TranslationBackend& backend,
    std::set<std::string, std::less<>> reserved)
    : job_(job), map_(map), backend_(backend), reserved_(std::move(reserved)) {}

PartOfSpeechHint IdentifierTranslator::hint_for(IdentifierRole role) const {
  if (role == IdentifierRole::Method) {
    return PartOfSpeechHint::verb(preferred_tense(job_.to_lang));
  }
  return PartOfSpeechHint::none();
}

void IdentifierTranslator::prefetch(std::span<const std::string> identifiers,
                                    std::span<const IdentifierRole> roles) {
  std::map<std::string, std::pair<PartOfSpeechHint, std::vector<std::string>>>
      groups;
  for (std::size_t i = 0; i < identifiers.size(); ++i) {
    const auto& id = identifiers[i];
    if (map_.contains(id) || !should_translate(id)) continue;
    auto hint = hint_for(roles[i]);
    auto& group = groups[hint.key()];
    group.first = hint;
    group.second.push_back(phrase_of(segment(id)));
  }
  for (auto& [key, group] : groups) {
    auto& phrases = group.second;
    std::sort(phrases.begin(), phrases.end());
    phrases.erase(std::unique(phrases.begin(), phrases.end()), phrases.end());
    backend_.translate_batch(phrases, job_.from_lang, job_.to_lang, group.first);
  }
}

std::string IdentifierTranslator::translate(const std::string& identifier,
                                            IdentifierRole role) {
  if (const std::string* existing = map_.find(identifier)) return *existing;

  SegmentedIdentifier seg = segment(identifier);
  ProgrammingLanguage lang = job_.prog_lang;
  bool romanize = job_.effective_translit_identifiers();
  std::string candidate;
  bool translated = false;

  auto result = backend_.translate_phrase(phrase_of(seg), job_.from_lang,
                                          job_.to_lang, hint_for(role));
  std::vector<std::string> words = split_words(result.text);
  if (result.confidence >= 1.0 && !words.empty()) {
    try {
      Script script = romanize ? detect_script(result.text) : Script::Latin;
      if (has_romanization(script)) {
        SegmentedIdentifier shaped = seg;
        shaped.segments = words;
        shaped.acronym.clear();
        candidate = default_transliterator().transliterate_identifier(
            shaped, script, lang);
      } else {
        candidate = recombine(seg, words, lang);
      }
      translated = true;
    } catch (const InvalidSegment& e) {
      warnings_.push_back("'" + identifier + "': " + e.what());
    }
  }

  if (!translated) {
    candidate = identifier;
    Script script = detect_script(identifier);
    if (romanize && !is_ascii(identifier) && has_romanization(script)) {
      candidate =
          default_transliterator().transliterate_identifier(seg, script, lang);
    }
    untranslatable_.push_back(identifier);
  }

  std::string final_name =
      resolve_collision(candidate, map_, lang, reserved_, identifier);
  if (final_name != candidate) ++collisions_;
  map_.add_computed(identifier, final_name);
  return final_name;
}

std::string translate_identifier(const std::string& identifier,
                                 IdentifierRole role,
                                 const TranslationJob& job,
                                 TranslationMap& map,
                                 TranslationBackend& backend) {
  IdentifierTranslator translator(job, map, backend);
  return translator.translate(identifier, role);
}

std::vector<std::string> shared_segment_divergences(const TranslationMap& map) {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> by_word;
  for (const auto& [source, translation] : map.entries()) {
    if (source == translation) continue;
    std::set<std::string> words;
    for (const auto& w : segment(source).segments) {
      if (to_utf32(w).size() >= 2) words.insert(w);
    }
    for (const auto& w : words) by_word[w].emplace_back(source, translation);
  }
  std::vector<std::string> out;
  for (const auto& [word, uses] : by_word) {
    if (uses.size() < 2) continue;
    std::set<std::string> common = translated_words(uses.front().second);
    for (std::size_t i = 1; i < uses.size() && !common.empty(); ++i) {
      std::set<std::string> next = translated_words(uses[i].second);
      std::set<std::string> both;
      std::set_intersection(common.begin(), common.end(), next.begin(),
                            next.end(), std::inserter(both, both.begin()));
      common = std::move(both);
    }
    if (!common.empty()) continue;
    std::string line = word + ":";
    for (const auto& [s, t] : uses) line += " " + s + "->" + t;
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace codeintl
