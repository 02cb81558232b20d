#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "codeintl/backend.hpp"
#include "codeintl/comments.hpp"
#include "codeintl/identifiers.hpp"
#include "codeintl/job.hpp"
#include "codeintl/lexing.hpp"

using namespace codeintl;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(CODEINTL_FIXTURES) / "corpus" / "java";

std::string corpus_text() {
  std::string all;
  for (const auto& e : fs::directory_iterator(kCorpus)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    all += buf.str();
  }
  return all;
}

void BM_Lex(benchmark::State& state) {
  std::string src = corpus_text();
  for (auto _ : state) {
    auto tokens = lex(src, ProgrammingLanguage::Java);
    benchmark::DoNotOptimize(tokens.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_Lex);

void BM_Classify(benchmark::State& state) {
  auto tokens = lex(corpus_text(), ProgrammingLanguage::Java);
  for (auto _ : state) {
    auto result = classify_identifiers(tokens, ProgrammingLanguage::Java);
    benchmark::DoNotOptimize(result.tokens.data());
  }
}
BENCHMARK(BM_Classify);

void BM_Segment(benchmark::State& state) {
  const char* names[] = {"getFavoriteNumber", "parseHTTPResponse", "UPPERCASE_CONSTANT",
                         "word_count", "计数Value", "x2"};
  for (auto _ : state) {
    for (const char* n : names) {
      auto seg = segment(n);
      benchmark::DoNotOptimize(recombine(seg, seg.segments));
    }
  }
}
BENCHMARK(BM_Segment);

void BM_TranslateCorpus(benchmark::State& state) {
  TranslationJob job;
  job.from_lang = "en";
  job.to_lang = "es";
  job.inputs = {kCorpus};
  job.use_cache = false;
  job.backend_instance = std::make_shared<DictionaryBackend>(default_dictionary_path());
  job.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto summary = run_job(job);
    benchmark::DoNotOptimize(summary.files.data());
  }
}
BENCHMARK(BM_TranslateCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
