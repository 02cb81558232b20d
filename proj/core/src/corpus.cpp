#include "codeintl/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "codeintl/comments.hpp"
#include "codeintl/errors.hpp"
#include "codeintl/identifiers.hpp"
#include "codeintl/transliteration.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

using nlohmann::json;

namespace {

std::string comment_text(const SourceToken& token) {
  CommentBlock block = classify_comment(token);
  std::string out;
  for (const auto& line : block.lines) {
    if (line.body.empty()) continue;
    if (!out.empty()) out += ' ';
    out += line.body;
  }
  return out;
}

std::optional<LanguageGuess> detect(TranslationBackend& backend,
                                    const std::vector<std::string>& phrases) {
  std::string text;
  for (const auto& p : phrases) {
    if (to_utf32(p).size() < 2) continue;
    if (!text.empty()) text += ' ';
    text += p;
  }
  if (text.empty()) return std::nullopt;
  LanguageGuess guess = backend.detect_language(text);
  if (guess.confidence > 0.5) return guess;
  return std::nullopt;
}

json guess_json(const std::optional<LanguageGuess>& g) {
  if (!g) return nullptr;
  return {{"lang", g->lang}, {"confidence", g->confidence}};
}

std::optional<LanguageGuess> guess_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return LanguageGuess{j.at("lang").get<std::string>(),
                       j.at("confidence").get<double>()};
}

std::string directory_of(const std::string& path) {
  auto slash = path.rfind('/');
  return slash == std::string::npos ? "." : path.substr(0, slash);
}

double fraction(int part, int whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / whole;
}

bool same_guess(const std::optional<LanguageGuess>& a,
                const std::optional<LanguageGuess>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->lang == b->lang && a->confidence == b->confidence);
}

}  // namespace

bool operator==(const FileLanguageProfile& a, const FileLanguageProfile& b) {
  return a.path == b.path && a.identifier_scripts == b.identifier_scripts &&
         a.comment_scripts == b.comment_scripts &&
         a.identifier_tokens == b.identifier_tokens &&
         a.comment_tokens == b.comment_tokens &&
         a.ascii_only_identifiers == b.ascii_only_identifiers &&
         a.non_ascii_comment_present == b.non_ascii_comment_present &&
         same_guess(a.detected_comment_language, b.detected_comment_language) &&
         same_guess(a.detected_identifier_language,
                    b.detected_identifier_language) &&
         a.skipped == b.skipped && a.error == b.error;
}

bool operator==(const CorpusReport& a, const CorpusReport& b) {
  return a.profiles == b.profiles && a.files == b.files &&
         a.skipped_files == b.skipped_files &&
         a.ascii_only_identifier_files == b.ascii_only_identifier_files &&
         a.non_ascii_comment_files == b.non_ascii_comment_files &&
         a.ascii_only_identifier_fraction == b.ascii_only_identifier_fraction &&
         a.non_ascii_comment_fraction == b.non_ascii_comment_fraction &&
         a.english_identifier_fraction == b.english_identifier_fraction &&
         a.identifier_script_totals == b.identifier_script_totals &&
         a.comment_script_totals == b.comment_script_totals &&
         a.comment_languages == b.comment_languages &&
         a.directories == b.directories;
}

FileLanguageProfile profile_source(std::string_view source, std::string path,
                                   ProgrammingLanguage lang,
                                   TranslationBackend& backend) {
  FileLanguageProfile profile;
  profile.path = std::move(path);
  TokenStream tokens;
  try {
    tokens = classify_identifiers(lex(source, lang), lang).tokens;
  } catch (const LexError& e) {
    profile.skipped = true;
    profile.error = e.what();
    return profile;
  }

  std::vector<std::string> identifier_phrases;
  std::vector<std::string> comment_phrases;
  for (const auto& tok : tokens) {
    if (tok.kind == TokenKind::TargetIdentifier) {
      ++profile.identifier_tokens;
      ++profile.identifier_scripts[std::string(to_string(detect_script(tok.text)))];
      if (!is_ascii(tok.text)) profile.ascii_only_identifiers = false;
      identifier_phrases.push_back(phrase_of(segment(tok.text)));
    } else if (tok.kind == TokenKind::Comment) {
      ++profile.comment_tokens;
      std::string text = comment_text(tok);
      ++profile.comment_scripts[std::string(to_string(detect_script(text)))];
      if (!is_ascii(text)) profile.non_ascii_comment_present = true;
      comment_phrases.push_back(std::move(text));
    }
  }
  profile.detected_comment_language = detect(backend, comment_phrases);
  profile.detected_identifier_language = detect(backend, identifier_phrases);
  return profile;
}

FileLanguageProfile profile_file(const std::filesystem::path& path,
                                 ProgrammingLanguage lang,
                                 TranslationBackend& backend,
                                 const std::filesystem::path& root) {
  std::string name = root.empty()
                         ? path.generic_string()
                         : std::filesystem::relative(path, root).generic_string();
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    FileLanguageProfile profile;
    profile.path = name;
    profile.skipped = true;
    profile.error = "cannot read file";
    return profile;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return profile_source(buf.str(), name, lang, backend);
}

CorpusReport aggregate(std::vector<FileLanguageProfile> profiles) {
  std::sort(profiles.begin(), profiles.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  CorpusReport report;
  int english = 0;
  for (const auto& p : profiles) {
    if (p.skipped) {
      ++report.skipped_files;
      continue;
    }
    ++report.files;
    DirectoryStats& dir = report.directories[directory_of(p.path)];
    ++dir.files;
    if (p.ascii_only_identifiers) {
      ++report.ascii_only_identifier_files;
      ++dir.ascii_only_identifier_files;
    }
    if (p.non_ascii_comment_present) {
      ++report.non_ascii_comment_files;
      ++dir.non_ascii_comment_files;
    }
    if (p.detected_identifier_language &&
        p.detected_identifier_language->lang == "en") {
      ++english;
    }
    if (p.detected_comment_language) {
      ++report.comment_languages[p.detected_comment_language->lang];
    }
    for (const auto& [s, n] : p.identifier_scripts) report.identifier_script_totals[s] += n;
    for (const auto& [s, n] : p.comment_scripts) report.comment_script_totals[s] += n;
  }
  report.ascii_only_identifier_fraction =
      fraction(report.ascii_only_identifier_files, report.files);
  report.non_ascii_comment_fraction =
      fraction(report.non_ascii_comment_files, report.files);
  report.english_identifier_fraction = fraction(english, report.files);
  report.profiles = std::move(profiles);
  return report;
}

std::string CorpusReport::to_json() const {
  json doc;
  doc["files"] = files;
  doc["skipped_files"] = skipped_files;
  doc["ascii_only_identifier_files"] = ascii_only_identifier_files;
  doc["non_ascii_comment_files"] = non_ascii_comment_files;
  doc["ascii_only_identifier_fraction"] = ascii_only_identifier_fraction;
  doc["non_ascii_comment_fraction"] = non_ascii_comment_fraction;
  doc["english_identifier_fraction"] = english_identifier_fraction;
  doc["identifier_script_totals"] = identifier_script_totals;
  doc["comment_script_totals"] = comment_script_totals;
  doc["comment_languages"] = comment_languages;
  doc["directories"] = json::object();
  for (const auto& [name, d] : directories) {
    doc["directories"][name] = {
        {"files", d.files},
        {"ascii_only_identifier_files", d.ascii_only_identifier_files},
        {"non_ascii_comment_files", d.non_ascii_comment_files}};
  }
  doc["profiles"] = json::array();
  for (const auto& p : profiles) {
    json j;
    j["path"] = p.path;
    j["identifier_scripts"] = p.identifier_scripts;
    j["comment_scripts"] = p.comment_scripts;
    j["identifier_tokens"] = p.identifier_tokens;
    j["comment_tokens"] = p.comment_tokens;
    j["ascii_only_identifiers"] = p.ascii_only_identifiers;
    j["non_ascii_comment_present"] = p.non_ascii_comment_present;
    j["detected_comment_language"] = guess_json(p.detected_comment_language);
    j["detected_identifier_language"] = guess_json(p.detected_identifier_language);
    j["skipped"] = p.skipped;
    if (!p.error.empty()) j["error"] = p.error;
    doc["profiles"].push_back(std::move(j));
  }
  doc["scope"] =
      "files on disk only; commit history and committer languages are not read";
  return doc.dump(2) + "\n";
}

CorpusReport CorpusReport::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report is not valid JSON: ") + e.what());
  }
  std::vector<FileLanguageProfile> profiles;
  for (const auto& j : doc.at("profiles")) {
    FileLanguageProfile p;
    p.path = j.at("path");
    p.identifier_scripts = j.at("identifier_scripts").get<std::map<std::string, int>>();
    p.comment_scripts = j.at("comment_scripts").get<std::map<std::string, int>>();
    p.identifier_tokens = j.at("identifier_tokens");
    p.comment_tokens = j.at("comment_tokens");
    p.ascii_only_identifiers = j.at("ascii_only_identifiers");
    p.non_ascii_comment_present = j.at("non_ascii_comment_present");
    p.detected_comment_language = guess_from(j.at("detected_comment_language"));
    p.detected_identifier_language = guess_from(j.at("detected_identifier_language"));
    p.skipped = j.at("skipped");
    p.error = j.value("error", std::string());
    profiles.push_back(std::move(p));
  }
  return aggregate(std::move(profiles));
}

CorpusReport analyze_directory(const std::filesystem::path& root,
                               ProgrammingLanguage lang,
                               TranslationBackend& backend, unsigned threads) {
  if (!std::filesystem::is_directory(root)) {
    throw ConfigError("not a directory: " + root.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() &&
        entry.path().extension() == source_extension(lang)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<FileLanguageProfile> profiles(files.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, files.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      profiles[i] = profile_file(files[i], lang, backend, root);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return aggregate(std::move(profiles));
}

}  // namespace codeintl
