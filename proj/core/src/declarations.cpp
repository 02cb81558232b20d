#include <algorithm>
#include <optional>

#include "codeintl/lexing.hpp"

namespace codeintl {

namespace {

bool is_trivia_kind(TokenKind kind) {
  return kind == TokenKind::Whitespace || kind == TokenKind::Newline ||
         kind == TokenKind::Comment;
}

bool is_dunder(std::string_view name) {
  return name.size() > 4 && name.starts_with("__") && name.ends_with("__");
}

// View over the significant (non-trivia) tokens of a file.
class SignificantTokens {
 public:
  explicit SignificantTokens(std::span<const SourceToken> tokens)
      : tokens_(tokens) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!is_trivia_kind(tokens[i].kind)) index_.push_back(i);
    }
  }

  std::size_t size() const { return index_.size(); }
  const SourceToken& operator[](std::size_t k) const {
    return tokens_[index_[k]];
  }
  std::size_t raw_index(std::size_t k) const { return index_[k]; }

  std::string_view text(std::ptrdiff_t k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= index_.size()) return {};
    return (*this)[static_cast<std::size_t>(k)].text;
  }
  bool is_ident(std::ptrdiff_t k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= index_.size()) return false;
    return is_identifier((*this)[static_cast<std::size_t>(k)].kind);
  }
  bool is_kind(std::ptrdiff_t k, TokenKind kind) const {
    if (k < 0 || static_cast<std::size_t>(k) >= index_.size()) return false;
    return (*this)[static_cast<std::size_t>(k)].kind == kind;
  }

 private:
  std::span<const SourceToken> tokens_;
  std::vector<std::size_t> index_;
};

constexpr std::string_view kJavaPrimitiveTypes[] = {
    "int",   "long",   "short", "byte", "char",
    "boolean", "float", "double", "void", "var",
};

bool is_java_primitive(std::string_view text) {
  return std::find(std::begin(kJavaPrimitiveTypes),
                   std::end(kJavaPrimitiveTypes),
                   text) != std::end(kJavaPrimitiveTypes);
}

int count_closing_angles(std::string_view text) {
  if (text == ">") return 1;
  if (text == ">>") return 2;
  if (text == ">>>") return 3;
  return 0;
}

class JavaScanner {
 public:
  explicit JavaScanner(std::span<const SourceToken> tokens) : sig_(tokens) {}

  DeclarationScan run() {
    mark_lambda_parameters();
    int depth = 0;
    std::optional<int> declarator_depth;
    std::optional<int> enum_body_depth;
    bool expect_enum_body = false;

    for (std::size_t k = 0; k < sig_.size(); ++k) {
      const SourceToken& tok = sig_[k];
      std::ptrdiff_t kk = static_cast<std::ptrdiff_t>(k);
      if (tok.kind == TokenKind::Punctuation) {
        std::string_view p = tok.text;
        if (p == "(" || p == "[" || p == "{") {
          ++depth;
          if (p == "{" && expect_enum_body) {
            enum_body_depth = depth;
            expect_enum_body = false;
          }
        } else if (p == ")" || p == "]" || p == "}") {
          if (enum_body_depth && depth == *enum_body_depth && p == "}") {
            enum_body_depth.reset();
          }
          --depth;
          if (declarator_depth && depth < *declarator_depth) {
            declarator_depth.reset();
          }
        } else if (p == ";") {
          if (declarator_depth && depth == *declarator_depth) {
            declarator_depth.reset();
          }
          if (enum_body_depth && depth == *enum_body_depth) {
            enum_body_depth.reset();
          }
        }
        continue;
      }
      if (tok.kind == TokenKind::Keyword && tok.text == "enum") {
        expect_enum_body = true;
      }
      if (!is_identifier(tok.kind)) continue;

      scan_.referenced.insert(tok.text);
      std::string_view prev = sig_.text(kk - 1);
      std::string_view next = sig_.text(kk + 1);

      if (sig_.is_kind(kk - 1, TokenKind::Keyword) &&
          (prev == "class" || prev == "interface" || prev == "enum" ||
           prev == "record")) {
        declare(k, kDeclType);
        continue;
      }
      if (enum_body_depth && depth == *enum_body_depth &&
          (prev == "{" || prev == ",") &&
          (next == "," || next == ";" || next == "}" || next == "(" ||
           next == "{")) {
        declare(k, kDeclVariable);
        continue;
      }
      if (lambda_params_.count(k) ||
          (next == "->" && prev != "." && prev != "::" && !in_case_label(kk))) {
        declare(k, kDeclVariable);
        continue;
      }
      if (is_type_like(kk - 1)) {
        if (next == "(") {
          if (tok.text == "main") {
            scan_.forced_external.insert(tok.text);
          } else if (!annotated_override(kk - 1)) {
            declare(k, kDeclMethod);
          }
        } else {
          declare(k, kDeclVariable);
          if (next == "=" || next == "," || next == ";" || next == "[" ||
              next == ":") {
            declarator_depth = depth;
          }
        }
        continue;
      }
      if (declarator_depth && depth == *declarator_depth && prev == "," &&
          (next == "=" || next == "," || next == ";" || next == "[")) {
        declare(k, kDeclVariable);
      }
    }
    return std::move(scan_);
  }

 private:
  void declare(std::size_t k, unsigned flags) {
    auto [it, inserted] = scan_.declared.try_emplace(sig_[k].text, 0u);
    if (inserted) scan_.order.push_back(sig_[k].text);
    it->second |= flags;
    scan_.definition_sites.push_back(sig_.raw_index(k));
  }

  bool is_type_like(std::ptrdiff_t k) const {
    if (k < 0) return false;
    const SourceToken& t = sig_[static_cast<std::size_t>(k)];
    if (is_identifier(t.kind)) return true;
    if (t.kind == TokenKind::Keyword) return is_java_primitive(t.text);
    if (t.text == "...") return true;
    if (t.text == "]") return sig_.text(k - 1) == "[";
    if (count_closing_angles(t.text) > 0) return closes_type_arguments(k);
    return false;
  }

  // True when the '>' run at k closes a generic type argument list.
  bool closes_type_arguments(std::ptrdiff_t k) const {
    int depth = 0;
    constexpr int kMaxSteps = 64;
    for (int steps = 0; k >= 0 && steps < kMaxSteps; --k, ++steps) {
      const SourceToken& t = sig_[static_cast<std::size_t>(k)];
      int closing = count_closing_angles(t.text);
      if (closing > 0) {
        depth += closing;
        continue;
      }
      if (t.text == "<") {
        if (--depth == 0) return sig_.is_ident(k - 1);
        continue;
      }
      bool allowed = is_identifier(t.kind) || t.text == "," || t.text == "." ||
                     t.text == "?" || t.text == "&" || t.text == "[" ||
                     t.text == "]" || t.text == "@" ||
                     (t.kind == TokenKind::Keyword &&
                      (t.text == "extends" || t.text == "super" ||
                       is_java_primitive(t.text)));
      if (!allowed) return false;
    }
    return false;
  }

  // "case A, B ->" labels are not lambda parameters.
  bool in_case_label(std::ptrdiff_t k) const {
    for (--k; k >= 0; --k) {
      const SourceToken& t = sig_[static_cast<std::size_t>(k)];
      if (t.kind == TokenKind::Keyword && t.text == "case") return true;
      if (!is_identifier(t.kind) && t.text != "," && t.text != ".") return false;
    }
    return false;
  }

  // Looks for "@Override" among the modifiers preceding a method header.
  bool annotated_override(std::ptrdiff_t k) const {
    for (; k >= 0; --k) {
      std::string_view t = sig_.text(k);
      if (t == ";" || t == "{" || t == "}") return false;
      if (t == "Override" && sig_.text(k - 1) == "@") return true;
    }
    return false;
  }

  // "(a, b) -> ..." and "(int a, String b) -> ...".
  void mark_lambda_parameters() {
    for (std::size_t k = 0; k + 1 < sig_.size(); ++k) {
      if (sig_[k].text != ")" || sig_[k + 1].text != "->") continue;
      int depth = 0;
      std::ptrdiff_t j = static_cast<std::ptrdiff_t>(k);
      for (; j >= 0; --j) {
        std::string_view t = sig_.text(j);
        if (t == ")") ++depth;
        if (t == "(" && --depth == 0) break;
      }
      if (j < 0) continue;
      for (std::size_t m = static_cast<std::size_t>(j) + 1; m < k; ++m) {
        std::string_view next = sig_.text(static_cast<std::ptrdiff_t>(m) + 1);
        if (sig_.is_ident(static_cast<std::ptrdiff_t>(m)) &&
            (next == "," || next == ")")) {
          lambda_params_.insert(m);
        }
      }
    }
  }

  SignificantTokens sig_;
  DeclarationScan scan_;
  std::set<std::size_t> lambda_params_;
};

class PythonScanner {
 public:
  explicit PythonScanner(std::span<const SourceToken> tokens)
      : tokens_(tokens) {}

  DeclarationScan run() {
    for (const auto& line : logical_lines()) scan_line(line);
    return std::move(scan_);
  }

 private:
  using Line = std::vector<std::size_t>;

  std::vector<Line> logical_lines() const {
    std::vector<Line> lines;
    Line current;
    int depth = 0;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const SourceToken& t = tokens_[i];
      if (t.kind == TokenKind::Newline) {
        bool continued = i > 0 && tokens_[i - 1].text == "\\";
        if (depth <= 0 && !continued && !current.empty()) {
          lines.push_back(std::move(current));
          current.clear();
          depth = 0;
        }
        continue;
      }
      if (is_trivia_kind(t.kind) || t.text == "\\") continue;
      if (t.kind == TokenKind::Punctuation) {
        if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
        if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
        // "if x: y = 1" carries a statement after the colon.
        if (t.text == ";" && depth == 0) {
          if (!current.empty()) lines.push_back(std::move(current));
          current.clear();
          continue;
        }
      }
      current.push_back(i);
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
  }

  void declare(std::size_t raw, unsigned flags) {
    const std::string& name = tokens_[raw].text;
    if (name == "self" || name == "cls" || is_dunder(name)) {
      scan_.forced_external.insert(name);
      return;
    }
    auto [it, inserted] = scan_.declared.try_emplace(name, 0u);
    if (inserted) scan_.order.push_back(name);
    it->second |= flags;
    scan_.definition_sites.push_back(raw);
  }

  void scan_line(const Line& line) {
    auto text = [&](std::ptrdiff_t k) -> std::string_view {
      if (k < 0 || static_cast<std::size_t>(k) >= line.size()) return {};
      return tokens_[line[static_cast<std::size_t>(k)]].text;
    };
    auto ident = [&](std::ptrdiff_t k) {
      if (k < 0 || static_cast<std::size_t>(k) >= line.size()) return false;
      return is_identifier(tokens_[line[static_cast<std::size_t>(k)]].kind);
    };
    auto keyword = [&](std::ptrdiff_t k, std::string_view word) {
      if (k < 0 || static_cast<std::size_t>(k) >= line.size()) return false;
      const SourceToken& t = tokens_[line[static_cast<std::size_t>(k)]];
      return t.kind == TokenKind::Keyword && t.text == word;
    };
    const auto n = static_cast<std::ptrdiff_t>(line.size());

    for (std::ptrdiff_t k = 0; k < n; ++k) {
      if (ident(k)) {
        const std::string& name = tokens_[line[k]].text;
        scan_.referenced.insert(name);
        if (name == "self" || name == "cls" || is_dunder(name)) {
          scan_.forced_external.insert(name);
        }
      }
    }

    bool import_line = keyword(0, "import") || keyword(0, "from");
    if (import_line) {
      for (std::ptrdiff_t k = 0; k < n; ++k) {
        if (ident(k)) scan_.forced_external.insert(tokens_[line[k]].text);
      }
      return;
    }

    std::ptrdiff_t start = keyword(0, "async") ? 1 : 0;

    for (std::ptrdiff_t k = 0; k < n; ++k) {
      if (keyword(k, "def") && ident(k + 1)) {
        declare(line[k + 1], kDeclMethod);
        scan_parameters(line, k + 2);
      } else if (keyword(k, "class") && ident(k + 1)) {
        declare(line[k + 1], kDeclType);
      } else if (keyword(k, "lambda")) {
        for (std::ptrdiff_t m = k + 1; m < n && text(m) != ":"; ++m) {
          std::string_view p = text(m - 1);
          if (ident(m) && (p == "lambda" || p == "," || p == "*" || p == "**")) {
            declare(line[m], kDeclVariable);
          }
        }
      } else if (keyword(k, "for")) {
        for (std::ptrdiff_t m = k + 1; m < n && !keyword(m, "in"); ++m) {
          std::string_view p = text(m - 1);
          std::string_view nx = text(m + 1);
          if (ident(m) && (p == "for" || p == "," || p == "(" || p == "[") &&
              nx != "." && nx != "[") {
            declare(line[m], kDeclVariable);
          }
        }
      } else if (keyword(k, "as") && ident(k + 1)) {
        declare(line[k + 1], kDeclVariable);
      } else if (ident(k) && text(k + 1) == ":=") {
        declare(line[k], kDeclVariable);
      }
    }
    scan_assignment_targets(line, start);
  }

  void scan_parameters(const Line& line, std::ptrdiff_t open) {
    const auto n = static_cast<std::ptrdiff_t>(line.size());
    if (open >= n || tokens_[line[open]].text != "(") return;
    int depth = 0;
    for (std::ptrdiff_t m = open; m < n; ++m) {
      const SourceToken& t = tokens_[line[m]];
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") {
        if (--depth == 0) return;
      }
      if (depth != 1 || !is_identifier(t.kind)) continue;
      std::string_view prev = tokens_[line[m - 1]].text;
      std::string_view next = m + 1 < n ? std::string_view(tokens_[line[m + 1]].text)
                                        : std::string_view();
      if ((prev == "(" || prev == "," || prev == "*" || prev == "**") &&
          (next == "," || next == ")" || next == "=" || next == ":")) {
        declare(line[m], kDeclVariable);
      }
    }
  }

  // Targets of "a = ...", "a, b = ...", "a: int = ...", "self.a = ...".
  void scan_assignment_targets(const Line& line, std::ptrdiff_t start) {
    const auto n = static_cast<std::ptrdiff_t>(line.size());
    std::vector<std::ptrdiff_t> equals;
    int depth = 0;
    std::ptrdiff_t annotation_colon = -1;
    for (std::ptrdiff_t k = start; k < n; ++k) {
      const SourceToken& t = tokens_[line[k]];
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
      if (depth != 0) continue;
      if (t.kind == TokenKind::Keyword && t.text != "None" && t.text != "True" &&
          t.text != "False" && equals.empty()) {
        // Compound statements ("if", "while", ...) are not assignments.
        return;
      }
      if (t.kind == TokenKind::Operator && t.text == "=") equals.push_back(k);
      if (t.text == ":" && equals.empty() && annotation_colon < 0) {
        annotation_colon = k;
      }
    }
    if (annotation_colon > start && equals.empty()) {
      // Bare annotation "count: int".
      declare_target_segment(line, start, annotation_colon);
      return;
    }
    std::ptrdiff_t seg_begin = start;
    for (std::ptrdiff_t eq : equals) {
      std::ptrdiff_t seg_end = eq;
      if (annotation_colon > seg_begin && annotation_colon < eq) {
        seg_end = annotation_colon;
      }
      declare_target_segment(line, seg_begin, seg_end);
      seg_begin = eq + 1;
    }
  }

  void declare_target_segment(const Line& line, std::ptrdiff_t begin,
                              std::ptrdiff_t end) {
    auto text = [&](std::ptrdiff_t k) -> std::string_view {
      if (k < begin || k >= end) return {};
      return tokens_[line[k]].text;
    };
    for (std::ptrdiff_t k = begin; k < end; ++k) {
      const SourceToken& t = tokens_[line[k]];
      if (!is_identifier(t.kind)) continue;
      std::string_view prev = text(k - 1);
      std::string_view next = text(k + 1);
      bool simple = (k == begin || prev == "," || prev == "(" || prev == "[" ||
                     prev == "*") &&
                    (k + 1 == end || next == "," || next == ")" || next == "]");
      bool attribute = prev == "." && (k - 2 >= begin) &&
                       (text(k - 2) == "self" || text(k - 2) == "cls") &&
                       (k - 2 == begin || text(k - 3) == ",") &&
                       (k + 1 == end || next == ",");
      if (simple || attribute) declare(line[k], kDeclVariable);
    }
  }

  std::span<const SourceToken> tokens_;
  DeclarationScan scan_;
};

}  // namespace

DeclarationScan scan_declarations(std::span<const SourceToken> tokens,
                                  ProgrammingLanguage lang) {
  DeclarationScan scan = lang == ProgrammingLanguage::Java
                             ? JavaScanner(tokens).run()
                             : PythonScanner(tokens).run();
  for (const auto& name : scan.forced_external) scan.declared.erase(name);
  std::erase_if(scan.order, [&](const std::string& name) {
    return scan.forced_external.count(name) > 0;
  });
  std::sort(scan.definition_sites.begin(), scan.definition_sites.end());
  scan.definition_sites.erase(
      std::unique(scan.definition_sites.begin(), scan.definition_sites.end()),
      scan.definition_sites.end());
  return scan;
}

SymbolTable merge_declarations(std::span<const DeclarationScan> scans) {
  SymbolTable table;
  std::set<std::string, std::less<>> forced;
  for (const auto& scan : scans) {
    for (const auto& [name, flags] : scan.declared) table.defined[name] |= flags;
    forced.insert(scan.forced_external.begin(), scan.forced_external.end());
  }
  for (const auto& name : forced) table.defined.erase(name);
  std::set<std::string, std::less<>> seen;
  for (const auto& scan : scans) {
    for (const auto& name : scan.order) {
      if (table.is_defined(name) && seen.insert(name).second) {
        table.declaration_order.push_back(name);
      }
    }
  }
  for (const auto& scan : scans) {
    for (const auto& name : scan.referenced) {
      if (!table.is_defined(name)) table.external.insert(name);
    }
  }
  for (const auto& name : forced) table.external.insert(name);
  return table;
}

TokenStream classify_identifiers(std::span<const SourceToken> tokens,
                                 ProgrammingLanguage lang,
                                 const SymbolTable& symbols) {
  DeclarationScan scan = scan_declarations(tokens, lang);
  TokenStream out(tokens.begin(), tokens.end());
  for (auto& tok : out) {
    if (!is_identifier(tok.kind)) continue;
    tok.kind = symbols.is_defined(tok.text) ? TokenKind::TargetIdentifier
                                            : TokenKind::ImmutableIdentifier;
    tok.definition_site = false;
  }
  for (std::size_t site : scan.definition_sites) {
    if (out[site].kind == TokenKind::TargetIdentifier) {
      out[site].definition_site = true;
    }
  }
  return out;
}

ClassifiedTokens classify_identifiers(std::span<const SourceToken> tokens,
                                      ProgrammingLanguage lang) {
  DeclarationScan scan = scan_declarations(tokens, lang);
  SymbolTable symbols = merge_declarations(std::span(&scan, 1));
  return {classify_identifiers(tokens, lang, symbols), std::move(symbols)};
}

}  // namespace codeintl
