#include <algorithm>
#include <array>
#include <string>

#include "codeintl/errors.hpp"
#include "codeintl/lexing.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

namespace {

constexpr std::array<std::string_view, 24> kJavaOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&",
    "||",   "==",  "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "&=",
    "|=",   "^=",  "%=",  "<<",
};

constexpr std::array<std::string_view, 23> kPythonOperators = {
    "**=", "//=", ">>=", "<<=", "->", ":=", "**", "//", "<<", ">>", "<=", ">=",
    "==",  "!=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@=",
};

bool is_punctuation_char(char c, ProgrammingLanguage lang) {
  switch (c) {
    case '(':
    case ')':
    case '[':
    case ']':
    case '{':
    case '}':
    case ';':
    case ',':
    case '.':
    case '@':
      return true;
    case ':':
      return lang == ProgrammingLanguage::Python;
    default:
      return false;
  }
}

bool is_python_string_prefix(std::string_view word) {
  if (word.empty() || word.size() > 2) return false;
  std::string lower;
  for (char c : word) lower.push_back(static_cast<char>(std::tolower(c)));
  return lower == "r" || lower == "u" || lower == "b" || lower == "f" ||
         lower == "rb" || lower == "br" || lower == "fr" || lower == "rf";
}

std::string clip(std::string_view text) {
  constexpr std::size_t kMaxSpan = 40;
  if (text.size() <= kMaxSpan) return std::string(text);
  std::size_t cut = kMaxSpan;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) {
    --cut;
  }
  return std::string(text.substr(0, cut)) + "...";
}

class Lexer {
 public:
  Lexer(std::string_view source, ProgrammingLanguage lang)
      : src_(source), lang_(lang) {}

  TokenStream run() {
    std::size_t check = 0;
    while (check < src_.size()) {
      std::size_t before = check;
      if (!decode_utf8(src_, check)) {
        advance_position(src_.substr(0, before));
        throw LexError("invalid UTF-8", line_, col_,
                       clip(src_.substr(before, 4)));
      }
    }
    while (pos_ < src_.size()) step();
    return std::move(tokens_);
  }

 private:
  char at(std::size_t offset = 0) const {
    std::size_t i = pos_ + offset;
    return i < src_.size() ? src_[i] : '\0';
  }

  bool starts_with(std::string_view s) const {
    return src_.substr(pos_).starts_with(s);
  }

  char32_t codepoint_at(std::size_t i, std::size_t* length = nullptr) const {
    std::size_t p = i;
    auto cp = decode_utf8(src_, p);
    if (length) *length = p - i;
    return cp.value_or(0);
  }

  void emit(TokenKind kind, std::size_t length,
            CommentStyle style = CommentStyle::None) {
    SourceToken token;
    token.kind = kind;
    token.text = std::string(src_.substr(pos_, length));
    token.line = line_;
    token.col = col_;
    token.width = display_width(token.text);
    token.comment_style = style;
    advance_position(token.text);
    pos_ += length;
    tokens_.push_back(std::move(token));
  }

  void advance_position(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++i;
      } else if (c == '\r') {
        ++line_;
        col_ = 1;
        ++i;
        if (i < text.size() && text[i] == '\n') ++i;
      } else {
        std::size_t before = i;
        if (!decode_utf8(text, i)) i = before + 1;
        ++col_;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what, std::size_t begin) {
    throw LexError(what, line_, col_, clip(src_.substr(begin)));
  }

  void step() {
    char c = at();
    if (c == '\n') return emit(TokenKind::Newline, 1);
    if (c == '\r') return emit(TokenKind::Newline, at(1) == '\n' ? 2 : 1);
    if (c == ' ' || c == '\t' || c == '\f') return lex_whitespace();
    if (starts_with("\xEF\xBB\xBF")) return emit(TokenKind::Whitespace, 3);
    if (lang_ == ProgrammingLanguage::Java) {
      if (starts_with("//")) return lex_line_comment();
      if (starts_with("/*")) return lex_block_comment();
      if (c == '"') return lex_java_string();
      if (c == '\'') return lex_quoted('\'', 0);
    } else {
      if (c == '#') return lex_line_comment();
      if (c == '\\' && (at(1) == '\n' || at(1) == '\r')) {
        return emit(TokenKind::Punctuation, 1);
      }
      if (c == '"' || c == '\'') return lex_python_string(0);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(at(1))))) {
      return lex_number();
    }
    std::size_t length = 0;
    char32_t cp = codepoint_at(pos_, &length);
    if (is_identifier_start(cp)) return lex_word();
    if (static_cast<unsigned char>(c) < 0x80) return lex_operator();
    emit(TokenKind::Operator, length);
  }

  void lex_whitespace() {
    std::size_t end = pos_;
    while (end < src_.size() &&
           (src_[end] == ' ' || src_[end] == '\t' || src_[end] == '\f')) {
      ++end;
    }
    emit(TokenKind::Whitespace, end - pos_);
  }

  void lex_line_comment() {
    std::size_t end = pos_;
    while (end < src_.size() && src_[end] != '\n' && src_[end] != '\r') ++end;
    emit(TokenKind::Comment, end - pos_, CommentStyle::LineComment);
  }

  void lex_block_comment() {
    std::size_t close = src_.find("*/", pos_ + 2);
    if (close == std::string_view::npos) fail("unterminated comment", pos_);
    bool javadoc = starts_with("/**") && !starts_with("/**/");
    emit(TokenKind::Comment, close + 2 - pos_,
         javadoc ? CommentStyle::JavaDoc : CommentStyle::BlockComment);
  }

  void lex_java_string() {
    if (starts_with("\"\"\"")) {
      std::size_t i = pos_ + 3;
      while (i < src_.size()) {
        if (src_[i] == '\\') {
          i += 2;
          continue;
        }
        if (src_.substr(i).starts_with("\"\"\"")) {
          return emit(TokenKind::StringLiteral, i + 3 - pos_);
        }
        ++i;
      }
      fail("unterminated text block", pos_);
    }
    lex_quoted('"', 0);
  }

  // Single-line literal starting at pos_ + prefix_len with `quote`.
  void lex_quoted(char quote, std::size_t prefix_len) {
    std::size_t i = pos_ + prefix_len + 1;
    bool python = lang_ == ProgrammingLanguage::Python;
    while (i < src_.size()) {
      char c = src_[i];
      if (c == '\\') {
        if (i + 1 < src_.size() && python && src_[i + 1] == '\r' &&
            i + 2 < src_.size() && src_[i + 2] == '\n') {
          i += 3;
        } else {
          i += 2;
        }
        continue;
      }
      if (c == '\n' || c == '\r') break;
      if (c == quote) return emit(TokenKind::StringLiteral, i + 1 - pos_);
      ++i;
    }
    fail(quote == '\'' && !python ? "unterminated character literal"
                                  : "unterminated string",
         pos_);
  }

  void lex_python_string(std::size_t prefix_len) {
    char quote = at(prefix_len);
    std::string triple(3, quote);
    if (src_.substr(pos_ + prefix_len).starts_with(triple)) {
      std::size_t i = pos_ + prefix_len + 3;
      while (i < src_.size()) {
        if (src_[i] == '\\') {
          i += 2;
          continue;
        }
        if (src_.substr(i).starts_with(triple)) {
          return emit(TokenKind::StringLiteral, i + 3 - pos_);
        }
        ++i;
      }
      fail("unterminated triple-quoted string", pos_);
    }
    lex_quoted(quote, prefix_len);
  }

  void lex_number() {
    std::size_t i = pos_;
    bool hex = src_.substr(pos_).starts_with("0x") ||
               src_.substr(pos_).starts_with("0X");
    while (i < src_.size()) {
      char c = src_[i];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++i;
      } else if (c == '.') {
        // Stop at the member access in "1 .real" style code, and never
        // swallow the "..." operator.
        if (src_.substr(i).starts_with("..")) break;
        ++i;
      } else if ((c == '+' || c == '-') && i > pos_) {
        char prev = static_cast<char>(std::tolower(src_[i - 1]));
        if ((!hex && prev == 'e') || (hex && prev == 'p')) {
          ++i;
        } else {
          break;
        }
      } else {
        break;
      }
    }
    emit(TokenKind::Number, i - pos_);
  }

  void lex_word() {
    std::size_t i = pos_;
    while (i < src_.size()) {
      std::size_t length = 0;
      char32_t cp = codepoint_at(i, &length);
      if (!is_identifier_part(cp) || length == 0) break;
      if (lang_ == ProgrammingLanguage::Python && cp == '$') break;
      i += length;
    }
    std::string_view word = src_.substr(pos_, i - pos_);
    if (lang_ == ProgrammingLanguage::Python && i < src_.size() &&
        (src_[i] == '"' || src_[i] == '\'') && is_python_string_prefix(word)) {
      return lex_python_string(word.size());
    }
    if (lang_ == ProgrammingLanguage::Python && word == "$") {
      return emit(TokenKind::Operator, 1);
    }
    emit(is_keyword(word, lang_) ? TokenKind::Keyword
                                 : TokenKind::ImmutableIdentifier,
         word.size());
  }

  void lex_operator() {
    auto try_ops = [&](auto& ops) {
      for (std::string_view op : ops) {
        if (starts_with(op)) return op.size();
      }
      return std::size_t{0};
    };
    std::size_t length = lang_ == ProgrammingLanguage::Java
                             ? try_ops(kJavaOperators)
                             : try_ops(kPythonOperators);
    if (length == 0 && lang_ == ProgrammingLanguage::Java && starts_with(">>")) {
      length = 2;
    }
    if (length > 0) return emit(TokenKind::Operator, length);
    char c = at();
    emit(is_punctuation_char(c, lang_) ? TokenKind::Punctuation
                                       : TokenKind::Operator,
         1);
  }

  std::string_view src_;
  ProgrammingLanguage lang_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  TokenStream tokens_;
};

bool is_trivia(const SourceToken& t) {
  return t.kind == TokenKind::Whitespace || t.kind == TokenKind::Newline ||
         t.kind == TokenKind::Comment ||
         (t.kind == TokenKind::Punctuation && t.text == "\\");
}

// Python docstrings: a string literal forming the first statement of the
// module or of a def/class body.
void mark_docstrings(TokenStream& tokens) {
  auto prev_significant = [&](std::size_t i) -> std::ptrdiff_t {
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - 1;
    while (j >= 0 && is_trivia(tokens[static_cast<std::size_t>(j)])) --j;
    return j;
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    SourceToken& tok = tokens[i];
    if (tok.kind != TokenKind::StringLiteral) continue;
    // Must be the first token on its line and end its logical line.
    bool line_start = i == 0 || tokens[i - 1].kind == TokenKind::Newline ||
                      (tokens[i - 1].kind == TokenKind::Whitespace &&
                       (i == 1 || tokens[i - 2].kind == TokenKind::Newline));
    if (!line_start) continue;
    std::size_t k = i + 1;
    while (k < tokens.size() && (tokens[k].kind == TokenKind::Whitespace ||
                                 tokens[k].kind == TokenKind::Comment)) {
      ++k;
    }
    if (k < tokens.size() && tokens[k].kind != TokenKind::Newline) continue;
    std::string_view body = tok.text;
    std::size_t quote = body.find_first_of("\"'");
    std::string_view prefix = body.substr(0, quote);
    if (prefix.find_first_of("bBfF") != std::string_view::npos) continue;

    std::ptrdiff_t p = prev_significant(i);
    bool docstring = false;
    if (p < 0) {
      docstring = true;
    } else if (tokens[static_cast<std::size_t>(p)].text == ":") {
      // Walk back to the start of the header's logical line.
      std::ptrdiff_t j = p;
      int depth = 0;
      std::ptrdiff_t first = p;
      while (j >= 0) {
        const SourceToken& t = tokens[static_cast<std::size_t>(j)];
        if (t.kind == TokenKind::Punctuation) {
          if (t.text == ")" || t.text == "]" || t.text == "}") ++depth;
          if (t.text == "(" || t.text == "[" || t.text == "{") --depth;
        }
        if (t.kind == TokenKind::Newline && depth == 0) {
          bool continued = j > 0 && tokens[static_cast<std::size_t>(j - 1)]
                                            .text == "\\";
          if (!continued) break;
        }
        if (!is_trivia(t)) first = j;
        --j;
      }
      const SourceToken& head = tokens[static_cast<std::size_t>(first)];
      std::string_view head_text = head.text;
      if (head_text == "async" || head_text == "@") {
        // "async def" headers; decorators sit on earlier lines.
        std::size_t n = static_cast<std::size_t>(first) + 1;
        while (n < tokens.size() && is_trivia(tokens[n])) ++n;
        if (n < tokens.size()) head_text = tokens[n].text;
      }
      docstring = head.kind == TokenKind::Keyword &&
                  (head_text == "def" || head_text == "class");
    }
    if (docstring) {
      tok.kind = TokenKind::Comment;
      tok.comment_style = CommentStyle::DocString;
    }
  }
}

}  // namespace

std::string_view to_string(ProgrammingLanguage lang) {
  return lang == ProgrammingLanguage::Java ? "java" : "python";
}

ProgrammingLanguage parse_programming_language(std::string_view name) {
  std::string lower = lowercase(name);
  if (lower == "java") return ProgrammingLanguage::Java;
  if (lower == "python" || lower == "py") return ProgrammingLanguage::Python;
  throw ConfigError("unknown programming language '" + std::string(name) +
                    "' (expected java or python)");
}

std::string_view source_extension(ProgrammingLanguage lang) {
  return lang == ProgrammingLanguage::Java ? ".java" : ".py";
}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::TargetIdentifier: return "TargetIdentifier";
    case TokenKind::ImmutableIdentifier: return "ImmutableIdentifier";
    case TokenKind::Comment: return "Comment";
    case TokenKind::StringLiteral: return "StringLiteral";
    case TokenKind::Number: return "Number";
    case TokenKind::Operator: return "Operator";
    case TokenKind::Punctuation: return "Punctuation";
    case TokenKind::Whitespace: return "Whitespace";
    case TokenKind::Newline: return "Newline";
  }
  return "?";
}

std::string_view to_string(CommentStyle style) {
  switch (style) {
    case CommentStyle::None: return "None";
    case CommentStyle::LineComment: return "LineComment";
    case CommentStyle::BlockComment: return "BlockComment";
    case CommentStyle::JavaDoc: return "JavaDoc";
    case CommentStyle::DocString: return "DocString";
  }
  return "?";
}

std::string join_tokens(std::span<const SourceToken> tokens) {
  std::size_t size = 0;
  for (const auto& t : tokens) size += t.text.size();
  std::string out;
  out.reserve(size);
  for (const auto& t : tokens) out += t.text;
  return out;
}

TokenStream lex(std::string_view source, ProgrammingLanguage lang) {
  TokenStream tokens = Lexer(source, lang).run();
  if (lang == ProgrammingLanguage::Python) mark_docstrings(tokens);
  return tokens;
}

const std::set<std::string, std::less<>>& keywords(ProgrammingLanguage lang) {
  static const std::set<std::string, std::less<>> java = {
      "abstract", "assert",     "boolean",   "break",     "byte",
      "case",     "catch",      "char",      "class",     "const",
      "continue", "default",    "do",        "double",    "else",
      "enum",     "extends",    "final",     "finally",   "float",
      "for",      "goto",       "if",        "implements", "import",
      "instanceof", "int",      "interface", "long",      "native",
      "new",      "package",    "private",   "protected", "public",
      "return",   "short",      "static",    "strictfp",  "super",
      "switch",   "synchronized", "this",    "throw",     "throws",
      "transient", "try",       "void",      "volatile",  "while",
      "true",     "false",      "null",      "var",       "record",
      "yield",    "sealed",     "permits",   "_",
  };
  static const std::set<std::string, std::less<>> python = {
      "False",  "None",   "True",    "and",      "as",     "assert",
      "async",  "await",  "break",   "class",    "continue", "def",
      "del",    "elif",   "else",    "except",   "finally", "for",
      "from",   "global", "if",      "import",   "in",     "is",
      "lambda", "nonlocal", "not",   "or",       "pass",   "raise",
      "return", "try",    "while",   "with",     "yield",  "match",
      "case",
  };
  return lang == ProgrammingLanguage::Java ? java : python;
}

bool is_keyword(std::string_view word, ProgrammingLanguage lang) {
  const auto& set = keywords(lang);
  return set.find(word) != set.end();
}

}  // namespace codeintl
