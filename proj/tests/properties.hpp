#pragma once

// Generators and checks shared by the property tests and the acceptance
// runner. Every check returns the number of violations and fills `detail`
// with the first few.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "codeintl/comments.hpp"
#include "codeintl/identifiers.hpp"
#include "codeintl/job.hpp"
#include "codeintl/translator.hpp"
#include "codeintl/unicode.hpp"
#include "test_util.hpp"

namespace props {

using namespace codeintl;

struct Outcome {
  int cases = 0;
  int violations = 0;
  std::vector<std::string> detail;

  void fail(const std::string& what) {
    ++violations;
    if (detail.size() < 5) detail.push_back(what);
  }
};

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <class T>
const T& one_of(std::mt19937& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(items.size()) - 1))];
}

// -- segmentation ------------------------------------------------------------

inline std::string ascii_word(std::mt19937& rng, int min_len, int max_len) {
  static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  std::string w;
  int n = pick(rng, min_len, max_len);
  for (int i = 0; i < n; ++i) w += letters[static_cast<std::size_t>(pick(rng, 0, 25))];
  return w;
}

inline std::string any_word(std::mt19937& rng) {
  static const std::vector<std::string> foreign = {
      "número", "größe", "çà", "число", "строк", "élan", "ñandú", "αλφα"};
  int roll = pick(rng, 0, 9);
  if (roll == 0) return one_of(rng, foreign);
  std::string w = ascii_word(rng, 1, 8);
  if (chance(rng, 0.15)) w += std::to_string(pick(rng, 0, 99));
  return w;
}

inline std::string cjk_word(std::mt19937& rng) {
  static const std::vector<std::string> words = {"计数", "移动", "单词", "数", "机器人",
                                                 "かず", "カウント", "변수"};
  return one_of(rng, words);
}

/// One identifier in the given convention (0..4: camel, Pascal, UPPER_SNAKE,
/// lower_snake, flat).
inline std::string make_identifier(std::mt19937& rng, int convention) {
  int n = convention == 4 ? 1 : pick(rng, 1, 4);
  std::vector<std::string> words;
  for (int i = 0; i < n; ++i) words.push_back(any_word(rng));
  std::string core;
  switch (convention) {
    case 0:
    case 1:
      for (int i = 0; i < n; ++i) {
        const std::string& w = words[static_cast<std::size_t>(i)];
        bool acronym = i > 0 && i + 1 < n && chance(rng, 0.1);
        if (i == 0 && convention == 0) {
          core += lowercase(w);
        } else if (acronym) {
          core += uppercase(ascii_word(rng, 2, 4));
        } else {
          core += capitalize(w);
        }
        if (chance(rng, 0.05)) core += cjk_word(rng);
      }
      break;
    case 2:
    case 3:
      for (int i = 0; i < n; ++i) {
        if (i > 0) core += '_';
        const std::string& w = words[static_cast<std::size_t>(i)];
        core += convention == 2 ? uppercase(w) : lowercase(w);
      }
      break;
    default:
      core = chance(rng, 0.1) ? cjk_word(rng) : lowercase(words[0]);
      break;
  }
  std::string lead(static_cast<std::size_t>(chance(rng, 0.1) ? pick(rng, 1, 2) : 0), '_');
  std::string trail(static_cast<std::size_t>(chance(rng, 0.05) ? 1 : 0), '_');
  return lead + core + trail;
}

inline Outcome segmentation_round_trip(unsigned seed, int count) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int i = 0; i < count; ++i) {
    std::string id = make_identifier(rng, i % 5);
    ++out.cases;
    try {
      SegmentedIdentifier seg = segment(id);
      std::string back = recombine(seg, seg.segments);
      if (back != id) out.fail(id + " -> " + back);
    } catch (const std::exception& e) {
      out.fail(id + ": " + e.what());
    }
  }
  return out;
}

// -- lexer ------------------------------------------------------------------

inline std::string java_fragment(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "int", "class", "return", "while", "x", "count", "移动", "número", "0", "42",
      "3.5e-2", "0x1F", "10L", "'a'", "'\\n'", "\"text\"", "\"a\\\"b\"", "\"你好\"",
      "+", "-=", ">>>=", "->", "::", "==", "&&", "(", ")", "{", "}", ";", ",", ".",
      "@Override", "// line comment", "/* block */", "/** doc */", "/* 多行\n注释 */",
      "\"\"\"\n  text block\n  \"\"\"", "_", "$x", "a1"};
  return one_of(rng, pieces);
}

inline std::string python_fragment(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "def", "class", "return", "lambda", "x", "count", "计数", "número", "0", "1_000",
      "3.5j", "0o17", "'a'", "\"b\"", "'''tri\nple'''", "\"\"\"doc\"\"\"", "r'\\d+'",
      "b'\\x00'", "f'{x}!'", "rb\"raw\"", "+", "**=", "//", "->", ":=", "(", ")", "[",
      "]", ":", ",", ".", "@", "# comment", "# 注释", "\\\n", "_", "__init__", "a1"};
  return one_of(rng, pieces);
}

inline std::string generated_source(std::mt19937& rng, ProgrammingLanguage lang) {
  bool java = lang == ProgrammingLanguage::Java;
  std::string src;
  int n = pick(rng, 0, 60);
  for (int i = 0; i < n; ++i) {
    std::string piece = java ? java_fragment(rng) : python_fragment(rng);
    src += piece;
    // Line comments run to the end of the line.
    if (piece.rfind(java ? "//" : "#", 0) == 0) {
      src += java && chance(rng, 0.3) ? "\r\n" : "\n";
      continue;
    }
    int sep = pick(rng, 0, 5);
    if (sep == 0) {
      src += "\n";
    } else if (sep == 1) {
      src += "\t";
    } else if (sep == 2 && java) {
      src += "\r\n";
    } else {
      src += " ";
    }
  }
  return src;
}

inline Outcome lexer_round_trip(unsigned seed, int count) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int i = 0; i < count; ++i) {
    auto lang = i % 2 ? ProgrammingLanguage::Python : ProgrammingLanguage::Java;
    std::string src = generated_source(rng, lang);
    ++out.cases;
    try {
      auto tokens = lex(src, lang);
      if (join_tokens(tokens) != src) out.fail("round trip: " + src);
      auto classified = classify_identifiers(tokens, lang);
      if (classify_identifiers(classified.tokens, lang).tokens != classified.tokens) {
        out.fail("classification not idempotent: " + src);
      }
    } catch (const std::exception& e) {
      out.fail(std::string(e.what()) + ": " + src);
    }
  }
  return out;
}

// -- comment reflow ---------------------------------------------------------

/// Replaces every phrase by random text between half and four times as wide,
/// keeping the placeholders.
class GrowthBackend : public TranslationBackend {
 public:
  explicit GrowthBackend(unsigned seed) : seed_(seed) {}
  std::string id() const override { return "growth"; }
  PhraseTranslation translate_phrase(const std::string& phrase, const std::string&,
                                     const std::string&, const PartOfSpeechHint&) override {
    std::mt19937 rng(seed_ ^ static_cast<unsigned>(std::hash<std::string>{}(phrase)));
    std::vector<std::string> markers;
    for (std::size_t p = phrase.find(kPlaceholderOpen); p != std::string::npos;
         p = phrase.find(kPlaceholderOpen, p + 1)) {
      auto close = phrase.find(kPlaceholderClose, p);
      markers.push_back(phrase.substr(p, close + kPlaceholderClose.size() - p));
    }
    int original = display_width(phrase);
    int target = std::max(1, original * pick(rng, 2, 16) / 4);
    static const std::vector<std::string> cjk = {"移", "动", "机", "器", "人", "数", "计",
                                                 "单", "词", "。", "，", "か", "ず"};
    std::string out;
    std::size_t next_marker = 0;
    bool cjk_mode = chance(rng, 0.5);
    while (display_width(out) < target || next_marker < markers.size()) {
      if (next_marker < markers.size() && chance(rng, 0.2)) {
        if (!out.empty()) out += ' ';
        out += markers[next_marker++];
        continue;
      }
      if (display_width(out) >= target && next_marker < markers.size()) {
        out += ' ' + markers[next_marker++];
        continue;
      }
      if (cjk_mode && chance(rng, 0.8)) {
        out += one_of(rng, cjk);
      } else {
        if (!out.empty()) out += ' ';
        out += ascii_word(rng, 1, 9);
        if (chance(rng, 0.1)) out += ',';
      }
    }
    return {out, 1.0};
  }
  LanguageGuess detect_language(std::string_view) override { return {"und", 0.0}; }

 private:
  unsigned seed_;
};

struct GeneratedComment {
  std::string source;
  ProgrammingLanguage lang;
  TranslationMap map;
};

inline GeneratedComment generated_comment(std::mt19937& rng) {
  GeneratedComment g{"", chance(rng, 0.75) ? ProgrammingLanguage::Java
                                           : ProgrammingLanguage::Python,
                     TranslationMap("en", "xx")};
  static const std::vector<std::string> idents = {"move", "turnAround", "count", "robot",
                                                  "pickBeeper", "steps"};
  for (const auto& id : idents) {
    g.map.add_computed(id, chance(rng, 0.5) ? capitalize(id) + "X" : "移动" + id.substr(0, 2));
  }
  int budget = pick(rng, 30, 80);
  int indent = pick(rng, 0, 8);
  std::string pad(static_cast<std::size_t>(indent), ' ');
  bool java = g.lang == ProgrammingLanguage::Java;
  bool javadoc = java && chance(rng, 0.5);
  std::string margin = java ? pad + " * " : pad;

  std::vector<std::string> lines;
  int paragraphs = pick(rng, 1, 3);
  for (int p = 0; p < paragraphs; ++p) {
    if (p > 0) lines.push_back("");
    int words = pick(rng, 3, 40);
    std::string line;
    for (int w = 0; w < words; ++w) {
      std::string word = chance(rng, 0.15) ? one_of(rng, idents) : ascii_word(rng, 1, 9);
      int lead = display_width(margin) + display_width(line) + 1;
      if (!line.empty() && lead + display_width(word) > budget - 3) {
        lines.push_back(line);
        line.clear();
      }
      line += line.empty() ? word : " " + word;
    }
    lines.push_back(line);
  }
  if (javadoc && chance(rng, 0.5)) lines.push_back("@param count how many steps");

  std::string src = pad;
  if (java) {
    src += javadoc ? "/**\n" : "/*\n";
    for (const auto& l : lines) src += l.empty() ? pad + " *\n" : margin + l + "\n";
    src += pad + " */\n";
  } else {
    src = "def f():\n" + std::string(4, ' ') + "\"\"\"";
    pad = "    ";
    src += lines[0] + "\n";
    for (std::size_t i = 1; i < lines.size(); ++i) {
      src += lines[i].empty() ? "\n" : pad + lines[i] + "\n";
    }
    src += pad + "\"\"\"\n";
  }
  g.source = src;
  return g;
}

inline std::vector<int> widths_from(const std::string& text, int start_col) {
  std::vector<int> out;
  std::size_t begin = 0;
  while (true) {
    auto nl = text.find('\n', begin);
    std::string line = text.substr(begin, nl == std::string::npos ? std::string::npos
                                                                    : nl - begin);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(display_width(line) + (out.empty() ? start_col - 1 : 0));
    if (nl == std::string::npos) break;
    begin = nl + 1;
  }
  return out;
}

inline Outcome reflow_width_bound(unsigned seed, int count) {
  std::mt19937 rng(seed);
  Outcome out;
  GrowthBackend backend(seed);
  for (int i = 0; i < count; ++i) {
    GeneratedComment g = generated_comment(rng);
    ++out.cases;
    TokenStream tokens = lex(g.source, g.lang);
    auto it = std::find_if(tokens.begin(), tokens.end(),
                           [](const SourceToken& t) { return t.kind == TokenKind::Comment; });
    if (it == tokens.end()) {
      out.fail("generator produced no comment: " + g.source);
      continue;
    }
    TranslationJob job;
    job.prog_lang = g.lang;
    job.from_lang = "en";
    job.to_lang = "xx";
    CommentBlock original = classify_comment(*it);
    std::vector<std::string> warnings;
    std::string translated = translate_comment_text(*it, g.map, job, backend, &warnings);
    int limit = original.max_width;
    auto widths = widths_from(translated, it->col);
    for (std::size_t k = 0; k < widths.size(); ++k) {
      if (widths[k] > limit) {
        std::ostringstream msg;
        msg << "line " << k + 1 << " is " << widths[k] << " wide, limit " << limit << ":\n"
            << translated;
        out.fail(msg.str());
        break;
      }
    }
    auto relexed = lex(translated, g.lang);
    if (relexed.size() != 1 || relexed[0].kind != TokenKind::Comment) {
      out.fail("translation is not a single comment:\n" + translated);
    }
  }
  return out;
}

// -- job consistency --------------------------------------------------------

inline std::string generated_program(std::mt19937& rng, int index,
                                     std::vector<std::string>& names) {
  static const std::vector<std::string> words = {
      "move", "turn", "left", "around", "pick", "beeper", "count", "value", "worth",
      "robot", "wall", "step", "total", "frac", "pct", "item", "list", "number", "get",
      "set", "height", "width", "name", "next", "line", "word"};
  auto name = [&](bool type) {
    int n = pick(rng, 1, 3);
    std::string s;
    for (int i = 0; i < n; ++i) {
      const std::string& w = one_of(rng, words);
      s += (i == 0 && !type) ? w : capitalize(w);
    }
    return s;
  };
  std::string cls = name(true) + std::to_string(index);
  std::vector<std::string> fields, methods;
  for (int i = pick(rng, 1, 4); i > 0; --i) fields.push_back(name(false));
  for (int i = pick(rng, 1, 4); i > 0; --i) methods.push_back(name(false));
  std::set<std::string> seen;
  auto unique = [&](std::vector<std::string>& v) {
    std::vector<std::string> out;
    for (auto& s : v) {
      if (seen.insert(s).second) out.push_back(s);
    }
    v = out;
  };
  unique(fields);
  unique(methods);
  names.insert(names.end(), fields.begin(), fields.end());
  names.insert(names.end(), methods.begin(), methods.end());

  std::ostringstream src;
  src << "/**\n * Holds the " << one_of(rng, words) << " and the " << one_of(rng, words)
      << ".\n */\npublic class " << cls << " {\n";
  for (const auto& f : fields) src << "    private int " << f << " = 0;\n";
  for (const auto& m : methods) {
    src << "\n    // " << one_of(rng, words) << " " << m << " "
        << one_of(rng, words) << "\n";
    src << "    public int " << m << "(int i) {\n";
    for (int k = pick(rng, 1, 3); k > 0; --k) {
      const std::string& f = one_of(rng, fields);
      src << "        " << f << " = " << f << " + i;\n";
    }
    if (chance(rng, 0.5)) {
      src << "        String s = \"" << one_of(rng, words) << " " << one_of(rng, words)
          << "\";\n";
    }
    src << "        return " << one_of(rng, methods) << "(i - 1) + "
        << one_of(rng, fields) << ";\n    }\n";
  }
  src << "}\n";
  return src.str();
}

/// Maps each identifier text at a TargetIdentifier position to the text at
/// the same position in the output.
inline void record_renamings(const std::string& original, const std::string& translated,
                             std::map<std::string, std::set<std::string>>& seen) {
  auto a = classify_identifiers(lex(original, ProgrammingLanguage::Java),
                                ProgrammingLanguage::Java)
               .tokens;
  auto b = lex(translated, ProgrammingLanguage::Java);
  if (a.size() != b.size()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind == TokenKind::TargetIdentifier) seen[a[i].text].insert(b[i].text);
  }
}

inline Outcome consistency(unsigned seed, int jobs, const std::filesystem::path& work) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int j = 0; j < jobs; ++j) {
    ++out.cases;
    auto dir = work / ("job" + std::to_string(j));
    std::filesystem::remove_all(dir);
    std::vector<std::string> names;
    int files = pick(rng, 1, 3);
    for (int f = 0; f < files; ++f) {
      testutil::write(dir / "src" / ("F" + std::to_string(f) + ".java"),
                      generated_program(rng, f, names));
    }
    TranslationMap prior("en", "es");
    for (const auto& n : names) {
      if (chance(rng, 0.2)) prior.set_prior(n, "fijo" + capitalize(n));
    }
    prior.save(dir / "prior.json");

    TranslationJob job;
    job.from_lang = "en";
    job.to_lang = chance(rng, 0.5) ? "es" : "zh";
    if (job.to_lang == "zh") {
      prior = TranslationMap("en", "zh");
      prior.save(dir / "prior.json");
    }
    job.translate_strings = chance(rng, 0.5);
    job.inputs = {dir / "src"};
    job.output_dir = dir / "out1";
    job.prior_map_path = dir / "prior.json";
    job.posterior_map_path = dir / "posterior.json";
    job.cache_dir = dir / "cache";
    auto first = run_job(job);
    std::string tag = "job " + std::to_string(j) + ": ";
    if (first.exit_code() != 0) {
      out.fail(tag + "exit " + std::to_string(first.exit_code()) + "\n" + first.to_text());
      continue;
    }

    std::map<std::string, std::set<std::string>> seen;
    for (const auto& f : first.files) record_renamings(f.original, f.translated, seen);
    for (const auto& [from, to] : seen) {
      if (to.size() != 1) out.fail(tag + from + " has several translations");
      const std::string* mapped = first.posterior.find(from);
      if (should_translate(from) && (!mapped || to.count(*mapped) == 0)) {
        out.fail(tag + from + " does not follow the posterior map");
      }
    }
    if (!first.posterior.is_injective()) out.fail(tag + "posterior is not injective");
    for (const auto& [from, to] : prior.entries()) {
      const std::string* got = first.posterior.find(from);
      if (!got || *got != to || first.posterior.origin(from) != EntryOrigin::Prior) {
        out.fail(tag + "prior entry " + from + " not preserved");
      }
    }

    TranslationJob again = job;
    again.prior_map_path = dir / "posterior.json";
    again.posterior_map_path = dir / "posterior2.json";
    again.output_dir = dir / "out2";
    auto second = run_job(again);
    if (second.backend_calls != 0) {
      out.fail(tag + "rerun made " + std::to_string(second.backend_calls) + " backend calls");
    }
    for (std::size_t k = 0; k < first.files.size() && k < second.files.size(); ++k) {
      if (testutil::read(first.files[k].output) != testutil::read(second.files[k].output)) {
        out.fail(tag + "rerun output differs for " + first.files[k].input.string());
      }
    }
    if (testutil::read(dir / "posterior.json") != testutil::read(dir / "posterior2.json")) {
      out.fail(tag + "rerun changed the posterior map");
    }
  }
  return out;
}

}  // namespace props
