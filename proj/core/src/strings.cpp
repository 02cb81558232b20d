#include <cctype>

#include "codeintl/comments.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

namespace {

bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }
bool is_octal(char c) { return c >= '0' && c <= '7'; }

std::size_t escape_length(std::string_view s, std::size_t p,
                          ProgrammingLanguage lang) {
  if (p + 1 >= s.size()) return s.size() - p;
  char c = s[p + 1];
  auto hex_run = [&](std::size_t from, std::size_t max) {
    std::size_t n = 0;
    while (n < max && from + n < s.size() && is_hex(s[from + n])) ++n;
    return n;
  };
  if (is_octal(c)) {
    std::size_t n = 1;
    while (n < 3 && p + 1 + n < s.size() && is_octal(s[p + 1 + n])) ++n;
    return 1 + n;
  }
  if (c == 'u') {
    std::size_t q = p + 1;
    while (lang == ProgrammingLanguage::Java && q < s.size() && s[q] == 'u') ++q;
    return (q - p) + hex_run(q, 4);
  }
  if (lang == ProgrammingLanguage::Python) {
    if (c == 'x') return 2 + hex_run(p + 2, 2);
    if (c == 'U') return 2 + hex_run(p + 2, 8);
    if (c == 'N' && p + 2 < s.size() && s[p + 2] == '{') {
      auto close = s.find('}', p + 3);
      if (close != std::string_view::npos) return close + 1 - p;
    }
    if (c == '\r' && p + 2 < s.size() && s[p + 2] == '\n') return 3;
  }
  std::size_t next = p + 1;
  decode_utf8(s, next);
  return next - p;
}

std::size_t percent_format(std::string_view s, std::size_t p) {
  std::size_t q = p + 1;
  if (q < s.size() && s[q] == '(') {
    auto close = s.find(')', q);
    if (close == std::string_view::npos) return 0;
    q = close + 1;
  }
  while (q < s.size() && std::string_view("-#0 +").find(s[q]) != std::string_view::npos) ++q;
  while (q < s.size() && (std::isdigit(static_cast<unsigned char>(s[q])) || s[q] == '*')) ++q;
  if (q < s.size() && s[q] == '.') {
    ++q;
    while (q < s.size() && (std::isdigit(static_cast<unsigned char>(s[q])) || s[q] == '*')) ++q;
  }
  while (q < s.size() && std::string_view("hlL").find(s[q]) != std::string_view::npos) ++q;
  if (q < s.size() &&
      std::string_view("diouxXeEfFgGcrsab%n").find(s[q]) != std::string_view::npos) {
    return q + 1 - p;
  }
  return 0;
}

bool has_letter(std::string_view s) {
  for (char32_t cp : to_utf32(s)) {
    if (cp < 0x80 ? std::isalpha(static_cast<int>(cp)) != 0
                  : is_identifier_part(cp) && !is_digit(cp)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string translate_string_literal(const SourceToken& token,
                                     const TranslationJob& job,
                                     TranslationBackend& backend,
                                     std::vector<std::string>* warnings) {
  const std::string& text = token.text;
  ProgrammingLanguage lang = job.prog_lang;
  std::size_t p = 0;
  if (lang == ProgrammingLanguage::Python) {
    while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p]))) {
      char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[p])));
      if (c == 'f' || c == 'b' || c == 'r') return text;
      ++p;
    }
  }
  if (p >= text.size() || (text[p] != '"' && text[p] != '\'')) return text;
  char q = text[p];
  if (lang == ProgrammingLanguage::Java && q == '\'') return text;
  std::string quote(1, q);
  if (text.compare(p, 3, std::string(3, q)) == 0 && text.size() >= p + 6) {
    if (lang == ProgrammingLanguage::Java) return text;
    quote = std::string(3, q);
  }
  std::size_t open = p + quote.size();
  if (text.size() < open + quote.size()) return text;
  std::string_view content(text.data() + open, text.size() - open - quote.size());
  if (!has_letter(content)) return text;

  std::string phrase;
  std::vector<std::string> saved;
  auto stash = [&](std::string_view piece) {
    phrase += placeholder(saved.size());
    saved.emplace_back(piece);
  };
  for (std::size_t i = 0; i < content.size();) {
    char c = content[i];
    std::size_t n = 0;
    if (c == '\\') {
      n = escape_length(content, i, lang);
    } else if (c == '%') {
      n = percent_format(content, i);
    } else if (c == '{' || c == '}') {
      if (i + 1 < content.size() && content[i + 1] == c) {
        n = 2;
      } else if (c == '{') {
        auto close = content.find('}', i);
        auto nested = content.find('{', i + 1);
        if (close != std::string_view::npos &&
            (nested == std::string_view::npos || nested > close)) {
          n = close + 1 - i;
        }
      }
    }
    if (n > 0) {
      stash(content.substr(i, n));
      i += n;
      continue;
    }
    std::size_t next = i;
    decode_utf8(content, next);
    if (next == i) next = i + 1;
    phrase.append(content.substr(i, next - i));
    i = next;
  }

  auto result = backend.translate_phrase(phrase, job.from_lang, job.to_lang,
                                         PartOfSpeechHint::none());
  if (result.text == phrase) return text;
  std::string out;
  std::vector<int> seen(saved.size(), 0);
  const std::string& t = result.text;
  bool triple = quote.size() == 3;
  for (std::size_t i = 0; i < t.size();) {
    if (t.compare(i, kPlaceholderOpen.size(), kPlaceholderOpen) == 0) {
      std::size_t d = i + kPlaceholderOpen.size();
      std::size_t e = d;
      while (e < t.size() && std::isdigit(static_cast<unsigned char>(t[e]))) ++e;
      if (e > d && t.compare(e, kPlaceholderClose.size(), kPlaceholderClose) == 0) {
        std::size_t index = std::stoul(t.substr(d, e - d));
        if (index < saved.size()) {
          ++seen[index];
          out += saved[index];
          i = e + kPlaceholderClose.size();
          continue;
        }
      }
    }
    char c = t[i];
    if (c == '\\') {
      out += "\\\\";
    } else if (c == q) {
      out += '\\';
      out += c;
    } else if (c == '\n' && !triple) {
      out += "\\n";
    } else if (c == '\r') {
      out += "\\r";
    } else {
      out += c;
    }
    ++i;
  }
  for (int s : seen) {
    if (s != 1) {
      if (warnings) {
        warnings->push_back(std::to_string(token.line) + ":" +
                            std::to_string(token.col) +
                            ": string translation dropped a placeholder; kept original");
      }
      return text;
    }
  }
  return text.substr(0, open) + out + quote;
}

}  // namespace codeintl
