#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "codeintl/backend.hpp"
#include "codeintl/job.hpp"
#include "codeintl/lexing.hpp"
#include "codeintl/translation_map.hpp"

namespace codeintl {

/// One physical line of a comment: decoration, text, decoration, line end.
struct CommentLine {
  std::string prefix;
  std::string body;
  std::string suffix;
  std::string eol;

  std::string str() const { return prefix + body + suffix + eol; }
  friend bool operator==(const CommentLine&, const CommentLine&) = default;
};

enum class ParagraphKind {
  /// Free text, translated and reflowed.
  Text,
  /// Structured line (@param, :param x:, Google "name: ..."); the lead is
  /// kept, an identifier slot is renamed, the rest is translated.
  Tag,
  /// Kept as is apart from identifier renaming (doctests, section headers,
  /// @see/@author, pragma comments).
  Verbatim,
};

struct Fragment {
  std::string text;
  /// A restored identifier; never split across lines.
  bool identifier = false;
};

struct CommentParagraph {
  ParagraphKind kind = ParagraphKind::Text;
  std::size_t first = 0;
  std::size_t last = 0;
  /// Structural start of the first line body ("@param count ", "- ").
  std::string lead;
  /// Identifier named by the lead ("count" in "@param count").
  std::string slot;
  /// Translatable text with line breaks joined.
  std::string text;

  /// Filled by translate_comment.
  bool changed = false;
  std::string new_lead;
  std::vector<Fragment> output;
};

struct CommentBlock {
  CommentStyle style = CommentStyle::BlockComment;
  std::vector<CommentLine> lines;
  std::vector<CommentParagraph> paragraphs;
  /// Paragraph texts joined by blank lines.
  std::string text;
  /// Decoration for new continuation lines (" * " in JavaDoc).
  std::string margin;
  /// Column of the first line; earlier columns count toward its width.
  int start_col = 1;
  /// Widest original line in display cells, line 0 measured from column 1.
  int max_width = 0;
  /// Single-line forms (// and #, one-quote docstrings) cannot gain lines.
  bool wrappable = true;
  bool raw_string = false;
  std::vector<std::string> warnings;

  std::string render() const;
  /// Display width of each rendered line, line 0 measured from column 1.
  std::vector<int> line_widths() const;
};

/// Splits a comment token into decoration and text and finds its
/// paragraphs and tags. Never fails: unknown shapes become a BlockComment
/// with an empty margin.
CommentBlock classify_comment(const SourceToken& token);

/// Translates every Text and Tag paragraph. Whole-word references to map
/// keys and {@...} inline tags are replaced by placeholders before the
/// backend sees the text and restored as their mapped names afterwards.
CommentBlock translate_comment(CommentBlock block, const TranslationMap& map,
                               const TranslationJob& job,
                               TranslationBackend& backend);

/// Lays out changed paragraphs so no line is wider than max_width.
/// Unchanged paragraphs keep their original lines.
CommentBlock reflow(CommentBlock block);

/// classify, translate, reflow and render in one go.
std::string translate_comment_text(const SourceToken& token,
                                   const TranslationMap& map,
                                   const TranslationJob& job,
                                   TranslationBackend& backend,
                                   std::vector<std::string>* warnings = nullptr);

/// Optional string-literal translation. Escapes and format placeholders
/// ({}, {0}, %s, ...) are protected; f-strings, byte and raw strings, Java
/// char literals and text blocks are left alone. Returns the new token
/// text.
std::string translate_string_literal(const SourceToken& token,
                                     const TranslationJob& job,
                                     TranslationBackend& backend,
                                     std::vector<std::string>* warnings = nullptr);

}  // namespace codeintl
