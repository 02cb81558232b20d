#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace codeintl {

enum class EntryOrigin { Prior, Computed };

std::string_view to_string(EntryOrigin origin);

/// Identifier renamings for one human-language pair.
///
/// Entries loaded from a file or added with set_prior are fixed: later
/// computed entries never replace them.
class TranslationMap {
 public:
  TranslationMap() = default;
  TranslationMap(std::string source_lang, std::string target_lang);

  const std::string& source_lang() const { return source_lang_; }
  const std::string& target_lang() const { return target_lang_; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(std::string_view source) const;
  const std::string* find(std::string_view source) const;
  /// Source identifier currently mapped to `translation`, if any.
  const std::string* source_of(std::string_view translation) const;
  std::optional<EntryOrigin> origin(std::string_view source) const;
  bool is_fixed(std::string_view source) const;

  void set_prior(const std::string& source, const std::string& translation);
  /// Returns false (and changes nothing) when `source` is already fixed.
  bool add_computed(const std::string& source, const std::string& translation);

  const std::map<std::string, std::string, std::less<>>& entries() const {
    return entries_;
  }

  bool is_injective() const;
  /// The same renamings read backwards (target to source).
  TranslationMap inverted() const;

  /// {"source_lang", "target_lang", "entries", "origins"}, keys sorted,
  /// two-space indent, trailing newline.
  std::string to_json() const;
  /// Entries without an "origins" record are Prior. All loaded entries
  /// are fixed. Throws ConfigError on malformed input.
  static TranslationMap from_json(std::string_view text);

  static TranslationMap load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  friend bool operator==(const TranslationMap& a, const TranslationMap& b) {
    return a.source_lang_ == b.source_lang_ &&
           a.target_lang_ == b.target_lang_ && a.entries_ == b.entries_ &&
           a.origins_ == b.origins_;
  }

 private:
  void put(const std::string& source, const std::string& translation,
           EntryOrigin origin, bool fixed);

  std::string source_lang_;
  std::string target_lang_;
  std::map<std::string, std::string, std::less<>> entries_;
  std::map<std::string, EntryOrigin, std::less<>> origins_;
  std::map<std::string, std::string, std::less<>> reverse_;
  std::map<std::string, bool, std::less<>> fixed_;
};

}  // namespace codeintl
