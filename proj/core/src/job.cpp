#include "codeintl/job.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "codeintl/comments.hpp"
#include "codeintl/errors.hpp"
#include "codeintl/translator.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

namespace fs = std::filesystem;

bool TranslationJob::effective_translit_identifiers() const {
  if (translit_identifiers) return *translit_identifiers;
  return is_rtl(script_of_language(to_lang));
}

bool TranslationJob::effective_translit_comments() const {
  return translit_comments.value_or(false);
}

void TranslationJob::validate() const {
  if (from_lang.empty() || to_lang.empty()) {
    throw ConfigError("source and target languages are required");
  }
  bool transliterating = translit_identifiers.value_or(false) ||
                         translit_comments.value_or(false);
  bool identity = !backend_instance && backend == "identity";
  if (primary_subtag(from_lang) == primary_subtag(to_lang) && !transliterating &&
      !identity) {
    throw ConfigError("source and target language are both '" + from_lang +
                      "'; pass a transliteration flag or the identity backend");
  }
  if (!backend_instance && (backend == "dict" || backend.rfind("dict:", 0) == 0)) {
    fs::path path = backend.size() > 5 ? fs::path(backend.substr(5))
                                       : default_dictionary_path();
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read dictionary " + path.string());
  }
  if (inputs.empty()) throw ConfigError("no input files");
}

Script script_of_language(std::string_view lang) {
  std::string code = primary_subtag(lang);
  if (code == "ar" || code == "fa" || code == "ur") return Script::Arabic;
  if (code == "he" || code == "yi" || code == "iw") return Script::Hebrew;
  if (code == "zh") return Script::Chinese;
  if (code == "ja") return Script::Japanese;
  if (code == "ko") return Script::Korean;
  if (code == "ru" || code == "uk" || code == "bg" || code == "sr" ||
      code == "be") {
    return Script::Russian;
  }
  return Script::Latin;
}

namespace {

std::string position(const SourceToken& tok) {
  return std::to_string(tok.line) + ":" + std::to_string(tok.col);
}

bool fixed_text(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword:
    case TokenKind::ImmutableIdentifier:
    case TokenKind::Number:
    case TokenKind::Operator:
    case TokenKind::Punctuation:
    case TokenKind::Whitespace:
    case TokenKind::Newline:
      return true;
    default:
      return false;
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw ConfigError("cannot write " + path.string());
}

struct InputFile {
  fs::path path;
  fs::path relative;
};

std::vector<InputFile> expand_inputs(const TranslationJob& job) {
  std::vector<InputFile> files;
  for (const auto& input : job.inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(input)) {
        if (entry.is_regular_file() &&
            entry.path().extension() == source_extension(job.prog_lang)) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      for (auto& p : found) files.push_back({p, fs::relative(p, input)});
    } else if (fs::is_regular_file(input)) {
      files.push_back({input, input.filename()});
    } else {
      throw ConfigError("input does not exist: " + input.string());
    }
  }
  return files;
}

struct Parsed {
  std::size_t index;
  TokenStream tokens;
};

}  // namespace

StructureCheck check_structure(std::string_view original,
                               std::string_view translated,
                               ProgrammingLanguage lang,
                               const SymbolTable* symbols) {
  TokenStream a;
  TokenStream b;
  try {
    a = lex(original, lang);
  } catch (const LexError& e) {
    return {false, std::string("original does not lex: ") + e.what()};
  }
  try {
    b = lex(translated, lang);
  } catch (const LexError& e) {
    return {false, std::string("translation does not lex: ") + e.what()};
  }
  a = symbols ? classify_identifiers(a, lang, *symbols)
              : classify_identifiers(a, lang).tokens;
  if (a.size() != b.size()) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i].kind == b[i].kind) ++i;
    std::string where = i < b.size() ? position(b[i]) : "end of file";
    return {false, "token count differs (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + "), first mismatch near " +
                       where};
  }
  std::map<std::string, std::string, std::less<>> forward;
  std::map<std::string, std::string, std::less<>> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const SourceToken& x = a[i];
    const SourceToken& y = b[i];
    bool same_kind = is_identifier(x.kind) ? is_identifier(y.kind)
                                           : x.kind == y.kind;
    if (!same_kind) {
      return {false, position(y) + ": expected " + std::string(to_string(x.kind)) +
                         ", found " + std::string(to_string(y.kind)) + " '" +
                         y.text + "'"};
    }
    if (x.kind == TokenKind::Comment && x.comment_style != y.comment_style) {
      return {false, position(y) + ": comment style changed"};
    }
    if (fixed_text(x.kind) && x.text != y.text) {
      return {false, position(y) + ": " + std::string(to_string(x.kind)) + " '" +
                         x.text + "' became '" + y.text + "'"};
    }
    if (!is_identifier(x.kind)) continue;
    auto [f, f_new] = forward.emplace(x.text, y.text);
    if (!f_new && f->second != y.text) {
      return {false, position(y) + ": '" + x.text + "' renamed both '" +
                         f->second + "' and '" + y.text + "'"};
    }
    auto [r, r_new] = backward.emplace(y.text, x.text);
    if (!r_new && r->second != x.text) {
      return {false, position(y) + ": '" + r->second + "' and '" + x.text +
                         "' both became '" + y.text + "'"};
    }
  }
  return {true, {}};
}

bool structure_check(std::string_view original, std::string_view translated,
                     ProgrammingLanguage lang) {
  return check_structure(original, translated, lang).ok;
}

int JobSummary::exit_code() const {
  if (backend_unavailable) return 3;
  if (files_failed > 0 || !structure_ok || !error.empty()) return 2;
  return 0;
}

std::string JobSummary::to_text() const {
  std::ostringstream out;
  out << "files processed: " << files_processed << "\n";
  out << "files failed: " << files_failed << "\n";
  out << "identifiers: " << identifiers_total << " total, "
      << identifiers_translated << " translated, " << passed_through.size()
      << " passed through\n";
  if (!passed_through.empty()) {
    out << "passed through:";
    for (const auto& id : passed_through) out << " " << id;
    out << "\n";
  }
  if (!skipped_short.empty()) {
    out << "kept (too short):";
    for (const auto& id : skipped_short) out << " " << id;
    out << "\n";
  }
  out << "collisions resolved: " << collisions_resolved << "\n";
  out << "backend calls: " << backend_calls << " (identifiers "
      << identifier_backend_calls << "), cache hits: " << cache_hits << "\n";
  out << "structure check: " << (structure_ok ? "ok" : "FAILED") << "\n";
  for (const auto& d : divergences) out << "divergence: " << d << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  for (const auto& f : files) {
    if (!f.ok) out << "failed: " << f.input.string() << ": " << f.diagnostic << "\n";
  }
  if (!error.empty()) out << "error: " << error << "\n";
  return out.str();
}

JobSummary run_job(const TranslationJob& job) {
  job.validate();
  JobSummary summary;
  const ProgrammingLanguage lang = job.prog_lang;

  std::vector<InputFile> inputs = expand_inputs(job);
  summary.files_processed = inputs.size();
  summary.files.resize(inputs.size());

  std::vector<Parsed> parsed;
  std::vector<DeclarationScan> scans;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    FileResult& result = summary.files[i];
    result.input = inputs[i].path;
    if (!job.output_dir.empty()) result.output = job.output_dir / inputs[i].relative;
    try {
      result.original = read_file(inputs[i].path);
      TokenStream tokens = lex(result.original, lang);
      scans.push_back(scan_declarations(tokens, lang));
      parsed.push_back({i, std::move(tokens)});
    } catch (const Error& e) {
      result.diagnostic = e.what();
    }
  }
  SymbolTable symbols = merge_declarations(scans);
  for (auto& p : parsed) p.tokens = classify_identifiers(p.tokens, lang, symbols);

  TranslationMap map(job.from_lang, job.to_lang);
  if (job.prior_map_path) {
    map = TranslationMap::load(*job.prior_map_path);
    if ((!map.source_lang().empty() &&
         primary_subtag(map.source_lang()) != primary_subtag(job.from_lang)) ||
        (!map.target_lang().empty() &&
         primary_subtag(map.target_lang()) != primary_subtag(job.to_lang))) {
      throw ConfigError("prior map is for " + map.source_lang() + "->" +
                        map.target_lang() + ", job is " + job.from_lang + "->" +
                        job.to_lang);
    }
    if (map.source_lang().empty()) {
      TranslationMap relabeled(job.from_lang, job.to_lang);
      for (const auto& [from, to] : map.entries()) relabeled.set_prior(from, to);
      map = std::move(relabeled);
    }
  }

  std::shared_ptr<TranslationBackend> inner =
      job.backend_instance ? job.backend_instance : make_backend(job.backend);
  auto cached = std::make_shared<CachedBackend>(
      inner, job.use_cache ? job.cache_dir : fs::path());
  auto finish = [&] {
    summary.posterior = map;
    if (job.posterior_map_path) map.save(*job.posterior_map_path);
    cached->flush();
    summary.backend_calls = cached->backend_calls();
    summary.cache_hits = cached->hits();
    for (const auto& w : cached->warnings()) summary.warnings.push_back(w);
  };

  std::set<std::string, std::less<>> reserved;
  for (const auto& p : parsed) {
    for (const auto& tok : p.tokens) {
      if (tok.kind == TokenKind::ImmutableIdentifier) reserved.insert(tok.text);
    }
  }
  std::vector<std::string> targets;
  std::vector<IdentifierRole> roles;
  for (const auto& name : collect_targets(std::span(&symbols, 1))) {
    reserved.insert(name);
    if (!should_translate(name)) {
      summary.skipped_short.push_back(name);
      continue;
    }
    targets.push_back(name);
    roles.push_back(role_of(name, symbols.flags(name)));
  }

  IdentifierTranslator translator(job, map, *cached, reserved);
  try {
    translator.prefetch(targets, roles);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      translator.translate(targets[i], roles[i]);
    }
  } catch (const BackendUnavailable& e) {
    summary.backend_unavailable = true;
    summary.error = e.what();
    finish();
    return summary;
  }
  summary.identifier_backend_calls = cached->backend_calls();
  summary.identifiers_total = targets.size();
  summary.passed_through = translator.untranslatable();
  summary.identifiers_translated = targets.size() - summary.passed_through.size();
  summary.collisions_resolved = translator.collisions();
  for (const auto& w : translator.warnings()) summary.warnings.push_back(w);

  std::vector<std::vector<std::string>> file_warnings(parsed.size());
  std::atomic<bool> unavailable{false};
  std::mutex error_mutex;
  auto rewrite = [&](std::size_t k) {
    const Parsed& p = parsed[k];
    FileResult& result = summary.files[p.index];
    std::vector<std::string>& warnings = file_warnings[k];
    try {
      TokenStream out = apply_renaming(p.tokens, map);
      for (std::size_t t = 0; t < out.size(); ++t) {
        SourceToken& tok = out[t];
        if (tok.kind == TokenKind::Comment && job.translate_comments) {
          tok.text = translate_comment_text(p.tokens[t], map, job, *cached, &warnings);
        } else if (tok.kind == TokenKind::StringLiteral && job.translate_strings) {
          tok.text = translate_string_literal(p.tokens[t], job, *cached, &warnings);
        }
      }
      result.translated = join_tokens(out);
      StructureCheck check =
          check_structure(result.original, result.translated, lang, &symbols);
      if (!check.ok) {
        result.diagnostic = "structure check failed: " + check.diagnostic;
        return;
      }
      if (!result.output.empty()) write_file(result.output, result.translated);
      result.ok = true;
    } catch (const BackendUnavailable& e) {
      unavailable = true;
      result.diagnostic = e.what();
      std::lock_guard lock(error_mutex);
      if (summary.error.empty()) summary.error = e.what();
    } catch (const std::exception& e) {
      result.diagnostic = e.what();
    }
  };

  unsigned threads = job.threads ? job.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, parsed.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < parsed.size();) rewrite(k);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < parsed.size(); ++k) {
    const std::string name = inputs[parsed[k].index].relative.generic_string();
    for (auto& w : file_warnings[k]) summary.warnings.push_back(name + ":" + w);
  }
  for (const auto& f : summary.files) {
    if (!f.ok) {
      ++summary.files_failed;
      if (f.diagnostic.rfind("structure check failed", 0) == 0) {
        summary.structure_ok = false;
      }
    }
  }
  summary.backend_unavailable = unavailable;
  summary.divergences = shared_segment_divergences(map);
  finish();
  return summary;
}

}  // namespace codeintl
