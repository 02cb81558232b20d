#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codeintl/lexing.hpp"

namespace codeintl {

enum class CasingConvention {
  CamelCase,
  PascalCase,
  UpperSnake,
  LowerSnake,
  Flat,
  Other,
};

std::string_view to_string(CasingConvention convention);

/// An identifier split into lowercase words, plus what is needed to put it
/// back together.
struct SegmentedIdentifier {
  std::vector<std::string> segments;
  CasingConvention convention = CasingConvention::Other;
  int leading_underscores = 0;
  int trailing_underscores = 0;
  /// Parallel to `segments`: the segment was an all-caps run ("HTTP") inside
  /// a camel or Pascal identifier.
  std::vector<bool> acronym;

  friend bool operator==(const SegmentedIdentifier&,
                         const SegmentedIdentifier&) = default;
};

/// Splits at underscores, lower-to-upper transitions, the last capital of an
/// acronym run, and transitions from cased letters into uncased scripts.
/// Latin (and other cased) segments are lowercased; digits stay with the
/// preceding segment.
SegmentedIdentifier segment(std::string_view identifier);

/// Formats `translated_segments` in the convention of `seg`. Each translated
/// segment may contain spaces, hyphens or apostrophes; those split it into
/// further words. Throws InvalidSegment when a word holds characters that
/// cannot appear in an identifier of `lang`.
std::string recombine(const SegmentedIdentifier& seg,
                      std::span<const std::string> translated_segments,
                      ProgrammingLanguage lang = ProgrammingLanguage::Java);

/// Segments joined by single spaces: "get favorite number".
std::string phrase_of(const SegmentedIdentifier& seg);

}  // namespace codeintl
