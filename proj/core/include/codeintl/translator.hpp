#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codeintl/backend.hpp"
#include "codeintl/identifiers.hpp"
#include "codeintl/job.hpp"
#include "codeintl/lexing.hpp"
#include "codeintl/translation_map.hpp"

namespace codeintl {

enum class IdentifierRole { Method, Class, Variable, Constant };

std::string_view to_string(IdentifierRole role);

/// Declared names in order of first appearance across the tables.
std::vector<std::string> collect_targets(std::span<const SymbolTable> tables);

/// False for one-letter Latin/Cyrillic names and for names without
/// letters. A single CJK character is a word and is translated.
bool should_translate(std::string_view identifier);

/// Infinitive for es, pt, fr, it, ro and ca; imperative otherwise.
Tense preferred_tense(std::string_view target_lang);

/// Class for type declarations, Method for names declared with a
/// parameter list, Constant for UPPER_SNAKE names, Variable otherwise.
IdentifierRole role_of(std::string_view identifier, unsigned decl_flags);

/// Appends 2, 3, ... (before trailing underscores) until `candidate` is
/// neither a keyword of `lang`, nor the translation of another source
/// identifier, nor in `reserved`. `source` is the identifier being
/// translated; its own name never counts as taken.
std::string resolve_collision(const std::string& candidate,
                              const TranslationMap& map,
                              ProgrammingLanguage lang,
                              const std::set<std::string, std::less<>>& reserved = {},
                              std::string_view source = {});

/// Replaces every TargetIdentifier that should be translated by its map
/// entry. Token count and kinds are unchanged. Throws MissingEntry when a
/// translatable target has no entry.
TokenStream apply_renaming(std::span<const SourceToken> tokens,
                           const TranslationMap& map);

/// Translates identifiers for one job, keeping the map functional and
/// injective.
class IdentifierTranslator {
 public:
  /// `reserved` holds names that no translation may take (immutable
  /// identifiers and the job's own target names).
  IdentifierTranslator(const TranslationJob& job, TranslationMap& map,
                       TranslationBackend& backend,
                       std::set<std::string, std::less<>> reserved = {});

  /// Map entry if present; otherwise translates, recombines, optionally
  /// romanizes, resolves collisions and records a computed entry.
  /// Untranslatable names map to themselves and are remembered.
  std::string translate(const std::string& identifier, IdentifierRole role);

  /// Sends every phrase the map does not cover to the backend in one batch
  /// per hint, so translate() is served from the cache.
  void prefetch(std::span<const std::string> identifiers,
                std::span<const IdentifierRole> roles);

  const std::vector<std::string>& untranslatable() const {
    return untranslatable_;
  }
  std::size_t collisions() const { return collisions_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  PartOfSpeechHint hint_for(IdentifierRole role) const;

  const TranslationJob& job_;
  TranslationMap& map_;
  TranslationBackend& backend_;
  std::set<std::string, std::less<>> reserved_;
  std::vector<std::string> untranslatable_;
  std::size_t collisions_ = 0;
  std::vector<std::string> warnings_;
};

std::string translate_identifier(const std::string& identifier,
                                 IdentifierRole role,
                                 const TranslationJob& job,
                                 TranslationMap& map,
                                 TranslationBackend& backend);

/// Segments that occur in several source identifiers whose translations
/// share no common segment. One line per segment.
std::vector<std::string> shared_segment_divergences(const TranslationMap& map);

}  // namespace codeintl
