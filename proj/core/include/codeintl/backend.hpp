#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codeintl {

enum class Tense { Imperative, Infinitive, ThirdPersonPresent };

std::string_view to_string(Tense tense);

struct PartOfSpeechHint {
  bool verb_first = false;
  Tense tense = Tense::Imperative;

  static PartOfSpeechHint none() { return {}; }
  static PartOfSpeechHint verb(Tense t) { return {true, t}; }

  /// "none", "verb:infinitive", ...; used in cache keys and on the wire.
  std::string key() const;
  static PartOfSpeechHint from_key(std::string_view key);

  friend bool operator==(const PartOfSpeechHint&,
                         const PartOfSpeechHint&) = default;
};

struct PhraseTranslation {
  std::string text;
  /// Fraction of the phrase's words the backend knew.
  double confidence = 0.0;
};

struct LanguageGuess {
  std::string lang;
  double confidence = 0.0;
};

/// Primary language subtag, lowercased: "zh-Hans-CN" -> "zh".
std::string primary_subtag(std::string_view bcp47);

/// Placeholder markers that backends must copy through untouched.
std::string placeholder(std::size_t index);
constexpr std::string_view kPlaceholderOpen = "⟦";
constexpr std::string_view kPlaceholderClose = "⟧";

/// Translation service contract. Implementations must tolerate concurrent
/// calls.
class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;

  virtual std::string id() const = 0;
  virtual PhraseTranslation translate_phrase(const std::string& phrase,
                                             const std::string& from,
                                             const std::string& to,
                                             const PartOfSpeechHint& hint) = 0;
  virtual std::vector<PhraseTranslation> translate_batch(
      std::span<const std::string> phrases, const std::string& from,
      const std::string& to, const PartOfSpeechHint& hint);
  virtual LanguageGuess detect_language(std::string_view text) = 0;
};

/// Returns every phrase unchanged with full confidence.
class IdentityBackend : public TranslationBackend {
 public:
  std::string id() const override { return "identity"; }
  PhraseTranslation translate_phrase(const std::string& phrase,
                                     const std::string& from,
                                     const std::string& to,
                                     const PartOfSpeechHint& hint) override;
  LanguageGuess detect_language(std::string_view text) override;
};

/// Offline word-list translator.
///
/// File format: UTF-8 TSV rows `from  to  source  target  [pos  [tense]]`.
/// `source` may be several words ("turn around"); `target` may be empty
/// (the word is dropped). `pos` is verb, noun, adj, ... and `tense` is
/// imperative, infinitive or third. Rows are also used backwards when a
/// pair has no rows of its own.
class DictionaryBackend : public TranslationBackend {
 public:
  struct Entry {
    std::string target;
    std::string pos;
    std::string tense;
  };

  explicit DictionaryBackend(const std::filesystem::path& path);
  /// Parses rows from a string; `name` becomes part of id().
  static DictionaryBackend from_string(std::string_view rows,
                                       std::string name = "inline");

  std::string id() const override { return id_; }
  PhraseTranslation translate_phrase(const std::string& phrase,
                                     const std::string& from,
                                     const std::string& to,
                                     const PartOfSpeechHint& hint) override;
  LanguageGuess detect_language(std::string_view text) override;

  /// Entries for a lowercase source phrase, or nullptr.
  const std::vector<Entry>* lookup(const std::string& from,
                                   const std::string& to,
                                   const std::string& source) const;
  bool has_pair(const std::string& from, const std::string& to) const;

 private:
  struct Pair {
    std::map<std::string, std::vector<Entry>, std::less<>> phrases;
    std::size_t max_words = 1;
    std::size_t max_chars = 1;
  };

  DictionaryBackend(std::string id, std::string_view rows);
  void parse(std::string_view rows);
  void add(const std::string& from, const std::string& to,
           const std::string& source, Entry entry);
  const Pair* pair_for(const std::string& from, const std::string& to) const;

  std::string id_;
  std::map<std::string, Pair> pairs_;
  std::map<std::string, Pair> reversed_;
  /// Latin-script vocabulary per language, for detection.
  std::map<std::string, std::map<std::string, int>> vocabulary_;
};

/// HTTP client for a translation service.
///
/// POST {url}/translate  {"from","to","phrases":[...],"hint"}
///   -> {"translations":[...],"confidences":[...]}
/// POST {url}/detect     {"text"} -> {"lang","confidence"}
class ServiceBackend : public TranslationBackend {
 public:
  /// `url` is "http://host:port" (an optional trailing path is a prefix).
  explicit ServiceBackend(std::string url, bool carrier_phrase = true);

  std::string id() const override { return "service:" + url_; }
  PhraseTranslation translate_phrase(const std::string& phrase,
                                     const std::string& from,
                                     const std::string& to,
                                     const PartOfSpeechHint& hint) override;
  std::vector<PhraseTranslation> translate_batch(
      std::span<const std::string> phrases, const std::string& from,
      const std::string& to, const PartOfSpeechHint& hint) override;
  LanguageGuess detect_language(std::string_view text) override;

  std::size_t requests() const { return requests_; }

 private:
  std::string post(const std::string& path, const std::string& body);

  std::string url_;
  std::string host_;
  int port_ = 80;
  std::string prefix_;
  bool carrier_phrase_;
  std::atomic<std::size_t> requests_{0};
};

/// Serves a backend over the ServiceBackend wire contract. Used by the
/// stub server tool and the integration tests.
class StubServer {
 public:
  explicit StubServer(std::shared_ptr<TranslationBackend> backend);
  ~StubServer();
  StubServer(const StubServer&) = delete;
  StubServer& operator=(const StubServer&) = delete;

  /// Binds to `host:port` (port 0 picks a free port) and serves on a
  /// background thread. Returns the bound port.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  /// Serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();
  std::size_t requests() const { return requests_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::shared_ptr<TranslationBackend> backend_;
  std::atomic<std::size_t> requests_{0};
};

/// Memoizing decorator with an optional persistent JSON store.
///
/// Keys are (backend id, from, to, hint, phrase). A corrupt store is
/// discarded with a warning and rebuilt.
class CachedBackend : public TranslationBackend {
 public:
  /// An empty `cache_dir` keeps the cache in memory only.
  CachedBackend(std::shared_ptr<TranslationBackend> inner,
                std::filesystem::path cache_dir = {});
  ~CachedBackend() override;

  std::string id() const override { return inner_->id(); }
  PhraseTranslation translate_phrase(const std::string& phrase,
                                     const std::string& from,
                                     const std::string& to,
                                     const PartOfSpeechHint& hint) override;
  std::vector<PhraseTranslation> translate_batch(
      std::span<const std::string> phrases, const std::string& from,
      const std::string& to, const PartOfSpeechHint& hint) override;
  LanguageGuess detect_language(std::string_view text) override;

  /// Writes the store atomically (temp file + rename). No-op in memory mode.
  void flush();

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  /// Phrases forwarded to the wrapped backend.
  std::size_t backend_calls() const { return backend_calls_; }
  std::size_t size() const;
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::filesystem::path store_path() const;

 private:
  std::string key(const std::string& phrase, const std::string& from,
                  const std::string& to, const PartOfSpeechHint& hint) const;
  void load();

  std::shared_ptr<TranslationBackend> inner_;
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
  std::map<std::string, PhraseTranslation> entries_;
  bool dirty_ = false;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
  std::atomic<std::size_t> backend_calls_{0};
  std::vector<std::string> warnings_;
};

/// "dict:<path>" or "service:<url>"; "identity" for the identity backend.
std::shared_ptr<TranslationBackend> make_backend(std::string_view spec);

/// The bundled dictionary under data_directory().
std::filesystem::path default_dictionary_path();

}  // namespace codeintl
