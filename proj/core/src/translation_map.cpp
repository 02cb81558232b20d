#include "codeintl/translation_map.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "codeintl/errors.hpp"

namespace codeintl {

using nlohmann::json;

std::string_view to_string(EntryOrigin origin) {
  return origin == EntryOrigin::Prior ? "prior" : "computed";
}

TranslationMap::TranslationMap(std::string source_lang, std::string target_lang)
    : source_lang_(std::move(source_lang)),
      target_lang_(std::move(target_lang)) {}

bool TranslationMap::contains(std::string_view source) const {
  return entries_.find(source) != entries_.end();
}

const std::string* TranslationMap::find(std::string_view source) const {
  auto it = entries_.find(source);
  return it == entries_.end() ? nullptr : &it->second;
}

const std::string* TranslationMap::source_of(
    std::string_view translation) const {
  auto it = reverse_.find(translation);
  return it == reverse_.end() ? nullptr : &it->second;
}

std::optional<EntryOrigin> TranslationMap::origin(
    std::string_view source) const {
  auto it = origins_.find(source);
  if (it == origins_.end()) return std::nullopt;
  return it->second;
}

bool TranslationMap::is_fixed(std::string_view source) const {
  auto it = fixed_.find(source);
  return it != fixed_.end() && it->second;
}

void TranslationMap::put(const std::string& source,
                         const std::string& translation, EntryOrigin origin,
                         bool fixed) {
  if (auto old = entries_.find(source); old != entries_.end()) {
    auto rev = reverse_.find(old->second);
    if (rev != reverse_.end() && rev->second == source) reverse_.erase(rev);
  }
  entries_[source] = translation;
  origins_[source] = origin;
  fixed_[source] = fixed;
  reverse_.try_emplace(translation, source);
}

void TranslationMap::set_prior(const std::string& source,
                               const std::string& translation) {
  put(source, translation, EntryOrigin::Prior, true);
}

bool TranslationMap::add_computed(const std::string& source,
                                  const std::string& translation) {
  if (is_fixed(source)) return false;
  put(source, translation, EntryOrigin::Computed, false);
  return true;
}

bool TranslationMap::is_injective() const {
  std::set<std::string_view> seen;
  for (const auto& [source, translation] : entries_) {
    if (!seen.insert(translation).second) return false;
  }
  return true;
}

TranslationMap TranslationMap::inverted() const {
  TranslationMap out(target_lang_, source_lang_);
  for (const auto& [source, translation] : entries_) {
    out.put(translation, source, origins_.at(source), is_fixed(source));
  }
  return out;
}

std::string TranslationMap::to_json() const {
  json doc = json::object();
  doc["source_lang"] = source_lang_;
  doc["target_lang"] = target_lang_;
  doc["entries"] = json::object();
  doc["origins"] = json::object();
  for (const auto& [source, translation] : entries_) {
    doc["entries"][source] = translation;
    doc["origins"][source] = std::string(to_string(origins_.at(source)));
  }
  return doc.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

TranslationMap TranslationMap::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("translation map is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_object()) {
    throw ConfigError("translation map needs an \"entries\" object");
  }
  TranslationMap map(doc.value("source_lang", std::string()),
                     doc.value("target_lang", std::string()));
  json origins = doc.value("origins", json::object());
  for (const auto& [source, value] : doc["entries"].items()) {
    if (!value.is_string()) {
      throw ConfigError("translation map entry '" + source +
                        "' is not a string");
    }
    EntryOrigin origin = EntryOrigin::Prior;
    if (origins.is_object() && origins.contains(source) &&
        origins[source] == "computed") {
      origin = EntryOrigin::Computed;
    }
    map.put(source, value.get<std::string>(), origin, true);
  }
  return map;
}

TranslationMap TranslationMap::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read translation map " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void TranslationMap::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write translation map " + path.string());
  out << to_json();
}

}  // namespace codeintl
