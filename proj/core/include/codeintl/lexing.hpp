#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codeintl {

enum class ProgrammingLanguage { Java, Python };

std::string_view to_string(ProgrammingLanguage lang);
/// Parses "java" / "python" (case-insensitive); throws ConfigError otherwise.
ProgrammingLanguage parse_programming_language(std::string_view name);
/// File extension including the dot: ".java" or ".py".
std::string_view source_extension(ProgrammingLanguage lang);

enum class TokenKind : std::uint8_t {
  Keyword,
  TargetIdentifier,
  ImmutableIdentifier,
  Comment,
  StringLiteral,
  Number,
  Operator,
  Punctuation,
  Whitespace,
  Newline,
};

std::string_view to_string(TokenKind kind);

inline bool is_identifier(TokenKind kind) {
  return kind == TokenKind::TargetIdentifier ||
         kind == TokenKind::ImmutableIdentifier;
}

enum class CommentStyle : std::uint8_t {
  None,
  LineComment,
  BlockComment,
  JavaDoc,
  DocString,
};

std::string_view to_string(CommentStyle style);

struct SourceToken {
  TokenKind kind = TokenKind::Whitespace;
  std::string text;
  int line = 1;
  int col = 1;
  int width = 0;
  /// Set on Comment tokens only.
  CommentStyle comment_style = CommentStyle::None;
  /// Identifier tokens: this occurrence declares the name.
  bool definition_site = false;

  friend bool operator==(const SourceToken&, const SourceToken&) = default;
};

using TokenStream = std::vector<SourceToken>;

/// Concatenation of all token texts; equals the lexed source.
std::string join_tokens(std::span<const SourceToken> tokens);

/// Lossless tokenization. Identifiers come out as ImmutableIdentifier and are
/// refined by classify_identifiers. Python docstrings are Comment tokens with
/// style DocString. Throws LexError on unterminated strings/comments or
/// invalid UTF-8.
TokenStream lex(std::string_view source, ProgrammingLanguage lang);

bool is_keyword(std::string_view word, ProgrammingLanguage lang);
const std::set<std::string, std::less<>>& keywords(ProgrammingLanguage lang);

/// What a declaration site declares. A name may carry several flags.
enum DeclarationFlags : unsigned {
  kDeclType = 1u << 0,
  kDeclMethod = 1u << 1,
  kDeclVariable = 1u << 2,
};

struct SymbolTable {
  /// Names declared in the analyzed file set, with how they were declared.
  std::map<std::string, unsigned, std::less<>> defined;
  /// Identifier texts referenced but never declared (or forced external:
  /// imports, @Override methods, dunder names, self/cls).
  std::set<std::string, std::less<>> external;
  /// Defined names in order of first declaration across files.
  std::vector<std::string> declaration_order;

  bool is_defined(std::string_view name) const {
    return defined.find(name) != defined.end();
  }
  unsigned flags(std::string_view name) const {
    auto it = defined.find(name);
    return it == defined.end() ? 0u : it->second;
  }
};

/// Declaration scan of one file. `forced_external` collects names that must
/// stay immutable no matter where else they are declared.
struct DeclarationScan {
  std::map<std::string, unsigned, std::less<>> declared;
  std::set<std::string, std::less<>> forced_external;
  std::set<std::string, std::less<>> referenced;
  /// Declared names in order of first declaration.
  std::vector<std::string> order;
  /// Token indices of declaration sites.
  std::vector<std::size_t> definition_sites;
};

DeclarationScan scan_declarations(std::span<const SourceToken> tokens,
                                  ProgrammingLanguage lang);

/// Merges per-file scans into one table for a multi-file job.
SymbolTable merge_declarations(std::span<const DeclarationScan> scans);

struct ClassifiedTokens {
  TokenStream tokens;
  SymbolTable symbols;
};

/// Classifies every identifier occurrence by name using the file's own
/// declarations.
ClassifiedTokens classify_identifiers(std::span<const SourceToken> tokens,
                                      ProgrammingLanguage lang);

/// Classifies against an existing (job-wide) table.
TokenStream classify_identifiers(std::span<const SourceToken> tokens,
                                 ProgrammingLanguage lang,
                                 const SymbolTable& symbols);

}  // namespace codeintl
