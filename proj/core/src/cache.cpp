#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "codeintl/backend.hpp"
#include "codeintl/errors.hpp"

namespace codeintl {

using nlohmann::json;

namespace {

constexpr int kStoreVersion = 1;

}  // namespace

CachedBackend::CachedBackend(std::shared_ptr<TranslationBackend> inner,
                             std::filesystem::path cache_dir)
    : inner_(std::move(inner)), dir_(std::move(cache_dir)) {
  if (!dir_.empty()) load();
}

CachedBackend::~CachedBackend() {
  try {
    flush();
  } catch (const std::exception& e) {
    std::cerr << "warning: translation cache not saved: " << e.what() << "\n";
  }
}

std::filesystem::path CachedBackend::store_path() const {
  return dir_.empty() ? dir_ : dir_ / "translations.json";
}

std::string CachedBackend::key(const std::string& phrase,
                               const std::string& from, const std::string& to,
                               const PartOfSpeechHint& hint) const {
  return inner_->id() + "\t" + from + "\t" + to + "\t" + hint.key() + "\t" +
         phrase;
}

void CachedBackend::load() {
  auto path = store_path();
  if (!std::filesystem::exists(path)) return;
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    json doc = json::parse(buf.str());
    if (doc.value("version", 0) != kStoreVersion) {
      throw std::runtime_error("unknown cache version");
    }
    for (const auto& [k, v] : doc.at("entries").items()) {
      entries_[k] = {v.at("text").get<std::string>(),
                     v.at("confidence").get<double>()};
    }
  } catch (const std::exception& e) {
    entries_.clear();
    dirty_ = true;
    warnings_.push_back("translation cache " + path.string() +
                        " is corrupt and was rebuilt (" + e.what() + ")");
  }
}

void CachedBackend::flush() {
  std::lock_guard lock(mutex_);
  if (dir_.empty() || !dirty_) return;
  std::filesystem::create_directories(dir_);
  json doc = {{"version", kStoreVersion}, {"entries", json::object()}};
  for (const auto& [k, v] : entries_) {
    doc["entries"][k] = {{"text", v.text}, {"confidence", v.confidence}};
  }
  auto path = store_path();
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << doc.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
  dirty_ = false;
}

std::size_t CachedBackend::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::vector<PhraseTranslation> CachedBackend::translate_batch(
    std::span<const std::string> phrases, const std::string& from,
    const std::string& to, const PartOfSpeechHint& hint) {
  std::vector<PhraseTranslation> out(phrases.size());
  std::vector<std::string> missing;
  std::vector<std::vector<std::size_t>> slots;
  {
    std::lock_guard lock(mutex_);
    std::map<std::string, std::size_t> pending;
    for (std::size_t i = 0; i < phrases.size(); ++i) {
      std::string k = key(phrases[i], from, to, hint);
      if (auto it = entries_.find(k); it != entries_.end()) {
        ++hits_;
        out[i] = it->second;
        continue;
      }
      ++misses_;
      auto [slot, added] = pending.try_emplace(k, missing.size());
      if (added) {
        missing.push_back(phrases[i]);
        slots.emplace_back();
      }
      slots[slot->second].push_back(i);
    }
  }
  if (missing.empty()) return out;

  backend_calls_ += missing.size();
  auto fresh = inner_->translate_batch(missing, from, to, hint);

  std::lock_guard lock(mutex_);
  for (std::size_t m = 0; m < missing.size(); ++m) {
    entries_[key(missing[m], from, to, hint)] = fresh[m];
    for (std::size_t i : slots[m]) out[i] = fresh[m];
  }
  dirty_ = true;
  return out;
}

PhraseTranslation CachedBackend::translate_phrase(
    const std::string& phrase, const std::string& from, const std::string& to,
    const PartOfSpeechHint& hint) {
  std::string one[] = {phrase};
  return translate_batch(one, from, to, hint).front();
}

LanguageGuess CachedBackend::detect_language(std::string_view text) {
  return inner_->detect_language(text);
}

}  // namespace codeintl
