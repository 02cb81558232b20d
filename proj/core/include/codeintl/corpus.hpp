#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codeintl/backend.hpp"
#include "codeintl/lexing.hpp"

namespace codeintl {

/// Script and language usage of one source file.
struct FileLanguageProfile {
  /// Relative to the analyzed root, '/' separated.
  std::string path;
  /// Script name -> number of target identifier occurrences.
  std::map<std::string, int> identifier_scripts;
  /// Script name -> number of comment tokens.
  std::map<std::string, int> comment_scripts;
  int identifier_tokens = 0;
  int comment_tokens = 0;
  /// True also for files that declare nothing.
  bool ascii_only_identifiers = true;
  bool non_ascii_comment_present = false;
  /// Present only when the detector's confidence exceeds 0.5.
  std::optional<LanguageGuess> detected_comment_language;
  std::optional<LanguageGuess> detected_identifier_language;
  bool skipped = false;
  std::string error;

  friend bool operator==(const FileLanguageProfile& a,
                         const FileLanguageProfile& b);
};

struct DirectoryStats {
  int files = 0;
  int ascii_only_identifier_files = 0;
  int non_ascii_comment_files = 0;

  friend bool operator==(const DirectoryStats&, const DirectoryStats&) = default;
};

struct CorpusReport {
  std::vector<FileLanguageProfile> profiles;
  int files = 0;
  int skipped_files = 0;
  int ascii_only_identifier_files = 0;
  int non_ascii_comment_files = 0;
  /// Over profiled (not skipped) files; 0 when there are none.
  double ascii_only_identifier_fraction = 0.0;
  double non_ascii_comment_fraction = 0.0;
  /// Files whose identifiers were detected as English.
  double english_identifier_fraction = 0.0;
  std::map<std::string, int> identifier_script_totals;
  std::map<std::string, int> comment_script_totals;
  std::map<std::string, int> comment_languages;
  std::map<std::string, DirectoryStats> directories;

  /// UTF-8 JSON, keys sorted, two-space indent, trailing newline.
  std::string to_json() const;
  static CorpusReport from_json(std::string_view text);

  friend bool operator==(const CorpusReport&, const CorpusReport&);
};

/// Lexes and profiles one file. Lex failures give a skipped profile.
FileLanguageProfile profile_file(const std::filesystem::path& path,
                                 ProgrammingLanguage lang,
                                 TranslationBackend& backend,
                                 const std::filesystem::path& root = {});

/// Profiles source text directly (tests, stdin).
FileLanguageProfile profile_source(std::string_view source, std::string path,
                                   ProgrammingLanguage lang,
                                   TranslationBackend& backend);

/// Folds profiles into totals. Profiles are sorted by path first.
CorpusReport aggregate(std::vector<FileLanguageProfile> profiles);

/// Every file under `root` with the language's extension, profiled in
/// parallel.
CorpusReport analyze_directory(const std::filesystem::path& root,
                               ProgrammingLanguage lang,
                               TranslationBackend& backend,
                               unsigned threads = 0);

}  // namespace codeintl
