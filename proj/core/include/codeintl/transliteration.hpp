#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "codeintl/identifiers.hpp"
#include "codeintl/lexing.hpp"

namespace codeintl {

/// Writing systems as far as romanization and corpus statistics care.
/// `None` means the text has no letters at all.
enum class Script {
  None,
  Latin,
  Arabic,
  Hebrew,
  Chinese,
  Japanese,
  Korean,
  Russian,
  Other,
  Mixed,
};

std::string_view to_string(Script script);
/// Scripts with a bundled romanization table.
bool has_romanization(Script script);
/// Right-to-left scripts.
bool is_rtl(Script script);

/// Dominant script of the letters in `text`. Han counts as Japanese when
/// kana are present. Mixed when two non-Latin scripts each exceed 20% of
/// the letters.
Script detect_script(std::string_view text);

/// Directory holding translit/ and dict/. CODEINTL_DATA overrides the
/// build-time default.
std::filesystem::path data_directory();

/// Longest-match-first rule table from a two-column TSV file.
class RomanizationTable {
 public:
  RomanizationTable(Script script, std::unordered_map<std::u32string, std::string> rules);

  /// Lines are "sequence<TAB>ascii"; '#' lines are comments.
  static RomanizationTable load(Script script, const std::filesystem::path& path);

  Script script() const { return script_; }
  std::size_t size() const { return rules_.size(); }

  /// Length (in codepoints) of the longest rule matching at `pos`, or 0.
  std::size_t match(std::u32string_view text, std::size_t pos,
                    const std::string** ascii) const;

  const std::unordered_map<std::u32string, std::string>& rules() const {
    return rules_;
  }

 private:
  Script script_;
  std::unordered_map<std::u32string, std::string> rules_;
  std::size_t max_length_ = 0;
};

/// Loads tables lazily from `<data>/translit/<script>.tsv`.
class Transliterator {
 public:
  explicit Transliterator(std::filesystem::path data_dir = data_directory());

  /// ASCII romanization. ASCII passes through, fullwidth forms and common
  /// CJK/Arabic punctuation fold to ASCII, Latin diacritics are dropped, and
  /// anything else becomes "_". Throws UnsupportedScript for scripts
  /// without a table.
  std::string transliterate(std::string_view text, Script script) const;

  /// Romanizes each segment and recombines in the identifier's convention.
  /// The result is a valid ASCII identifier; a leading digit ("7" for ha)
  /// gets an underscore in front.
  std::string transliterate_identifier(const SegmentedIdentifier& seg,
                                       Script script,
                                       ProgrammingLanguage lang =
                                           ProgrammingLanguage::Java) const;

  const RomanizationTable& table(Script script) const;

 private:
  std::filesystem::path data_dir_;
  mutable std::map<Script, std::unique_ptr<RomanizationTable>> tables_;
  mutable std::mutex mutex_;
};

/// Process-wide transliterator over data_directory().
const Transliterator& default_transliterator();

std::string transliterate(std::string_view text, Script script);
std::string transliterate_identifier(const SegmentedIdentifier& seg,
                                     Script script,
                                     ProgrammingLanguage lang =
                                         ProgrammingLanguage::Java);

}  // namespace codeintl
