#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codeintl/corpus.hpp"
#include "codeintl/errors.hpp"
#include "codeintl/job.hpp"

namespace fs = std::filesystem;

namespace {

fs::path default_cache_dir() {
  if (const char* env = std::getenv("CODEINTL_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "codeintl";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "codeintl";
  }
  return {};
}

// --flag / --no-flag, last one wins; unset when neither is given.
void tristate(CLI::App* app, const std::string& name, std::optional<bool>& value,
              const std::string& help) {
  app->add_flag_callback("--" + name, [&value] { value = true; }, help);
  app->add_flag_callback("--no-" + name, [&value] { value = false; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate the human language of Java and Python source"};
  app.require_subcommand(1);

  codeintl::TranslationJob job;
  std::string prog = "java";
  std::string prior;
  std::string posterior;
  std::string cache_dir;
  bool no_cache = false;
  bool no_comments = false;
  std::vector<std::string> inputs;
  std::string output;

  CLI::App* translate = app.add_subcommand("translate", "Translate source files");
  translate->add_option("--prog", prog, "java or python")->required();
  translate->add_option("--from", job.from_lang, "Source language (BCP 47)")->required();
  translate->add_option("--to", job.to_lang, "Target language (BCP 47)")->required();
  translate->add_flag("--strings", job.translate_strings, "Also translate string literals");
  translate->add_flag("--no-comments", no_comments, "Leave comments untouched");
  tristate(translate, "translit-identifiers", job.translit_identifiers,
           "Romanize translated identifiers (default: on for RTL targets)");
  tristate(translate, "translit-comments", job.translit_comments,
           "Romanize translated comments");
  translate->add_option("--prior-map", prior, "Translation map to honor");
  translate->add_option("--posterior-map", posterior, "Where to write the final map");
  translate->add_option("--backend", job.backend,
                        "dict:<path>, service:<url> or identity")
      ->default_val("dict:");
  translate->add_option("--cache-dir", cache_dir, "Phrase cache directory");
  translate->add_flag("--no-cache", no_cache, "Do not read or write the phrase cache");
  translate->add_option("--threads", job.threads, "Worker threads (0: all cores)");
  translate->add_option("-o,--output", output, "Output directory")->required();
  translate->add_option("inputs", inputs, "Files or directories")->required();

  std::string analyze_dir;
  std::string source_lang = "java";
  std::string report_path;
  std::string detector = "dict:";
  unsigned analyze_threads = 0;
  CLI::App* analyze = app.add_subcommand("analyze", "Report script and language usage");
  analyze->add_option("dir", analyze_dir, "Directory to scan")->required();
  analyze->add_option("--source-lang", source_lang, "java or python")->required();
  analyze->add_option("--report", report_path, "Write the JSON report here (default: stdout)");
  analyze->add_option("--backend", detector, "Language detector backend")
      ->default_val("dict:");
  analyze->add_option("--threads", analyze_threads, "Worker threads (0: all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (translate->parsed()) {
      job.prog_lang = codeintl::parse_programming_language(prog);
      job.translate_comments = !no_comments;
      if (!prior.empty()) job.prior_map_path = prior;
      if (!posterior.empty()) job.posterior_map_path = posterior;
      job.use_cache = !no_cache;
      job.cache_dir = cache_dir.empty() ? default_cache_dir() : fs::path(cache_dir);
      job.output_dir = output;
      for (const auto& in : inputs) job.inputs.emplace_back(in);

      codeintl::JobSummary summary = codeintl::run_job(job);
      std::cerr << summary.to_text();
      return summary.exit_code();
    }

    auto lang = codeintl::parse_programming_language(source_lang);
    auto backend = codeintl::make_backend(detector);
    auto report = codeintl::analyze_directory(analyze_dir, lang, *backend, analyze_threads);
    std::string json = report.to_json();
    if (report_path.empty()) {
      std::cout << json;
    } else {
      std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
      out << json;
      if (!out) throw codeintl::ConfigError("cannot write " + report_path);
    }
    std::cerr << report.files << " files, " << report.skipped_files << " skipped\n";
    return 0;
  } catch (const codeintl::BackendUnavailable& e) {
    std::cerr << "codeintl: " << e.what() << "\n";
    return 3;
  } catch (const codeintl::Error& e) {
    std::cerr << "codeintl: " << e.what() << "\n";
    return 1;
  }
}
