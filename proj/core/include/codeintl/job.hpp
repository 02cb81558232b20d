#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "codeintl/backend.hpp"
#include "codeintl/lexing.hpp"
#include "codeintl/translation_map.hpp"
#include "codeintl/transliteration.hpp"

namespace codeintl {

/// Everything one translation run needs.
struct TranslationJob {
  ProgrammingLanguage prog_lang = ProgrammingLanguage::Java;
  std::string from_lang = "en";
  std::string to_lang = "en";
  bool translate_comments = true;
  bool translate_strings = false;
  /// Unset: on when the target language is written right to left.
  std::optional<bool> translit_identifiers;
  /// Unset: off.
  std::optional<bool> translit_comments;
  std::optional<std::filesystem::path> prior_map_path;
  std::optional<std::filesystem::path> posterior_map_path;
  /// "dict:<path>", "service:<url>" or "identity". Empty means the bundled
  /// dictionary.
  std::string backend = "dict:";
  /// Overrides `backend` when set (tests inject counting backends here).
  std::shared_ptr<TranslationBackend> backend_instance;
  /// Persistent phrase cache directory; empty keeps the cache in memory.
  std::filesystem::path cache_dir;
  bool use_cache = true;
  /// Files or directories. Directories contribute every file with the
  /// job's source extension, recursively.
  std::vector<std::filesystem::path> inputs;
  /// Empty: translate in memory only.
  std::filesystem::path output_dir;
  unsigned threads = 0;

  bool effective_translit_identifiers() const;
  bool effective_translit_comments() const;
  /// Throws ConfigError when the job is inconsistent.
  void validate() const;
};

struct FileResult {
  std::filesystem::path input;
  std::filesystem::path output;
  std::string original;
  std::string translated;
  bool ok = false;
  std::string diagnostic;
};

struct JobSummary {
  std::size_t files_processed = 0;
  std::size_t files_failed = 0;
  /// Distinct target identifiers long enough to translate.
  std::size_t identifiers_total = 0;
  std::size_t identifiers_translated = 0;
  /// Kept verbatim because the backend could not translate them.
  std::vector<std::string> passed_through;
  /// Single-letter names that are never translated.
  std::vector<std::string> skipped_short;
  std::size_t collisions_resolved = 0;
  /// Segments shared by several identifiers that did not end up sharing a
  /// translated segment (getHeight/setHeight style).
  std::vector<std::string> divergences;
  std::vector<std::string> warnings;
  bool structure_ok = true;
  bool backend_unavailable = false;
  std::string error;
  /// Phrases sent to the wrapped backend (cache misses), all phases.
  std::size_t backend_calls = 0;
  /// The part of backend_calls spent on identifiers.
  std::size_t identifier_backend_calls = 0;
  std::size_t cache_hits = 0;
  std::vector<FileResult> files;
  TranslationMap posterior;

  /// 0 success, 2 some files failed, 3 backend unavailable.
  int exit_code() const;
  std::string to_text() const;
};

/// Collect targets, translate identifiers, comments and (optionally)
/// strings, write outputs and the posterior map, and self-check every file.
JobSummary run_job(const TranslationJob& job);

struct StructureCheck {
  bool ok = false;
  std::string diagnostic;
};

/// Token kinds must match one to one, non-renamable texts must be equal,
/// and the identifier renaming read off the pair must be a well-defined
/// injection. `symbols` classifies the original (defaults to its own
/// declarations).
StructureCheck check_structure(std::string_view original,
                               std::string_view translated,
                               ProgrammingLanguage lang,
                               const SymbolTable* symbols = nullptr);

bool structure_check(std::string_view original, std::string_view translated,
                     ProgrammingLanguage lang);

/// Script used to write `lang` (Arabic for "ar", "fa", "ur"; Hebrew for
/// "he"; ...). Latin for unknown codes.
Script script_of_language(std::string_view lang);

}  // namespace codeintl
