#include "codeintl/comments.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "codeintl/errors.hpp"
#include "codeintl/translator.hpp"
#include "codeintl/transliteration.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

namespace {

bool is_blank_char(char c) { return c == ' ' || c == '\t' || c == '\f'; }

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_blank_char(s[b])) ++b;
  while (e > b && is_blank_char(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool starts_with(std::string_view s, std::string_view p) {
  return s.substr(0, p.size()) == p;
}

struct RawLine {
  std::string content;
  std::string eol;
};

std::vector<RawLine> split_lines(std::string_view text) {
  std::vector<RawLine> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n' || text[i] == '\r') {
      std::size_t eol_len = (text[i] == '\r' && i + 1 < text.size() &&
                             text[i + 1] == '\n')
                                ? 2
                                : 1;
      lines.push_back({std::string(text.substr(start, i - start)),
                       std::string(text.substr(i, eol_len))});
      i += eol_len - 1;
      start = i + 1;
    }
  }
  lines.push_back({std::string(text.substr(start)), ""});
  return lines;
}

// Moves trailing blanks of the body into the suffix.
void settle(CommentLine& line) {
  std::size_t e = line.body.size();
  while (e > 0 && is_blank_char(line.body[e - 1])) --e;
  line.suffix = line.body.substr(e) + line.suffix;
  line.body.resize(e);
}

std::size_t leading_blanks(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_blank_char(s[i])) ++i;
  return i;
}

bool split_line_comment(std::string_view text, CommentBlock& block) {
  std::size_t i = 0;
  if (starts_with(text, "//")) {
    while (i < text.size() && text[i] == '/') ++i;
  } else if (starts_with(text, "#")) {
    while (i < text.size() && text[i] == '#') ++i;
  } else {
    return false;
  }
  i += leading_blanks(text.substr(i));
  CommentLine line{std::string(text.substr(0, i)), std::string(text.substr(i)),
                   "", ""};
  settle(line);
  block.lines = {line};
  block.wrappable = false;
  return true;
}

bool split_block_comment(std::string_view text, CommentBlock& block) {
  if (!starts_with(text, "/*") || text.size() < 4 ||
      text.substr(text.size() - 2) != "*/") {
    return false;
  }
  auto raw = split_lines(text);
  for (std::size_t n = 0; n < raw.size(); ++n) {
    std::string_view content = raw[n].content;
    std::size_t begin = 0;
    std::size_t end = content.size();
    std::string suffix;
    if (n + 1 == raw.size()) {
      std::size_t floor = n == 0 ? 2 : 0;
      std::size_t s = end - 2;
      while (s > floor && content[s - 1] == '*') --s;
      while (s > floor && is_blank_char(content[s - 1])) --s;
      suffix = std::string(content.substr(s));
      end = s;
    }
    if (n == 0) {
      begin = 2;
      while (begin < end && content[begin] == '*') ++begin;
      begin += leading_blanks(content.substr(begin, end - begin));
    } else {
      begin = leading_blanks(content.substr(0, end));
      if (begin < end && content[begin] == '*' &&
          !(begin + 1 < content.size() && content[begin + 1] == '/')) {
        ++begin;
        begin += leading_blanks(content.substr(begin, end - begin));
      }
    }
    CommentLine line{std::string(content.substr(0, begin)),
                     std::string(content.substr(begin, end - begin)), suffix,
                     raw[n].eol};
    settle(line);
    block.lines.push_back(std::move(line));
  }
  return true;
}

bool split_docstring(std::string_view text, CommentBlock& block) {
  std::size_t p = 0;
  while (p < text.size() && std::string_view("rRuUbBfF").find(text[p]) !=
                                std::string_view::npos) {
    if (text[p] == 'r' || text[p] == 'R') block.raw_string = true;
    ++p;
  }
  if (p >= text.size() || (text[p] != '"' && text[p] != '\'')) return false;
  char q = text[p];
  std::string quote(1, q);
  if (text.substr(p, 3) == std::string(3, q)) quote = std::string(3, q);
  std::size_t open = p + quote.size();
  if (text.size() < open + quote.size() ||
      text.substr(text.size() - quote.size()) != quote) {
    return false;
  }
  block.wrappable = quote.size() == 3;
  auto raw = split_lines(text);
  for (std::size_t n = 0; n < raw.size(); ++n) {
    std::string_view content = raw[n].content;
    std::size_t end = content.size();
    std::string suffix;
    if (n + 1 == raw.size()) {
      std::size_t s = end - quote.size();
      std::size_t floor = n == 0 ? open : 0;
      while (s > floor && is_blank_char(content[s - 1])) --s;
      suffix = std::string(content.substr(s));
      end = s;
    }
    std::size_t begin = n == 0 ? open : 0;
    begin += leading_blanks(content.substr(begin, end - begin));
    CommentLine line{std::string(content.substr(0, begin)),
                     std::string(content.substr(begin, end - begin)), suffix,
                     raw[n].eol};
    settle(line);
    block.lines.push_back(std::move(line));
  }
  return true;
}

// -- paragraph structure ---------------------------------------------------

const std::set<std::string, std::less<>> kSlotJavadocTags = {"param", "throws",
                                                             "exception"};
const std::set<std::string, std::less<>> kVerbatimJavadocTags = {
    "see", "author", "since", "version", "serial", "serialData", "serialField",
    "hidden", "inheritDoc", "uses", "provides", "spec"};
const std::set<std::string, std::less<>> kSlotFields = {
    "param", "parameter", "arg", "argument", "key", "keyword", "raises",
    "raise", "except", "exception", "var", "ivar", "cvar"};
const std::set<std::string, std::less<>> kVerbatimFields = {"type", "rtype",
                                                            "vartype"};
const std::set<std::string, std::less<>> kEntrySections = {
    "Args", "Arguments", "Parameters", "Params", "Keyword Args",
    "Keyword Arguments", "Other Parameters", "Attributes", "Raises", "Raise",
    "Warns"};
const std::set<std::string, std::less<>> kTextSections = {
    "Returns", "Return", "Yields", "Yield", "Note", "Notes", "Todo",
    "Warning", "Warnings", "See Also", "References", "Methods"};
const std::set<std::string, std::less<>> kCodeSections = {"Example",
                                                          "Examples"};

/// Identifier-like run starting at `pos` in UTF-8 text; returns byte length.
std::size_t identifier_run(std::string_view text, std::size_t pos) {
  std::size_t p = pos;
  while (p < text.size()) {
    std::size_t next = p;
    auto cp = decode_utf8(text, next);
    if (!cp || !is_identifier_part(*cp)) break;
    p = next;
  }
  return p - pos;
}

std::size_t word_run(std::string_view text, std::size_t pos) {
  std::size_t p = pos;
  while (p < text.size() && !is_blank_char(text[p])) ++p;
  return p - pos;
}

bool is_pragma(std::string_view body) {
  static constexpr std::string_view kMarkers[] = {
      "noqa", "type:", "pylint:", "pragma", "fmt:", "isort:", "mypy:",
      "pyright:", "NOSONAR", "noinspection", "$NON-NLS", "CHECKSTYLE",
      "-*-", "coding:", "coding=", "nolint", "NOLINT"};
  if (starts_with(body, "!")) return true;
  for (auto m : kMarkers) {
    if (body.find(m) != std::string_view::npos) return true;
  }
  return false;
}

struct Lead {
  ParagraphKind kind = ParagraphKind::Text;
  std::string lead;
  std::string slot;
};

/// "@tag slot rest" for JavaDoc.
std::optional<Lead> javadoc_tag(const std::string& body) {
  if (body.size() < 2 || body[0] != '@') return std::nullopt;
  std::size_t n = identifier_run(body, 1);
  if (n == 0) return std::nullopt;
  std::string tag = body.substr(1, n);
  std::size_t p = 1 + n;
  p += leading_blanks(std::string_view(body).substr(p));
  Lead lead;
  lead.kind = ParagraphKind::Tag;
  if (kVerbatimJavadocTags.count(tag)) {
    lead.kind = ParagraphKind::Verbatim;
  } else if (kSlotJavadocTags.count(tag) && p < body.size()) {
    std::size_t w = word_run(body, p);
    lead.slot = body.substr(p, w);
    p += w;
    p += leading_blanks(std::string_view(body).substr(p));
  }
  lead.lead = body.substr(0, p);
  return lead;
}

/// ":field args: rest" for reST docstrings.
std::optional<Lead> field_tag(const std::string& body) {
  if (body.size() < 3 || body[0] != ':') return std::nullopt;
  std::size_t close = body.find(':', 1);
  if (close == std::string::npos || close == 1) return std::nullopt;
  std::string inside = body.substr(1, close - 1);
  std::size_t n = identifier_run(inside, 0);
  if (n == 0) return std::nullopt;
  std::string field = inside.substr(0, n);
  Lead lead;
  lead.kind = kVerbatimFields.count(field) ? ParagraphKind::Verbatim
                                           : ParagraphKind::Tag;
  if (kSlotFields.count(field)) {
    std::string rest = trim(inside.substr(n));
    auto space = rest.rfind(' ');
    lead.slot = space == std::string::npos ? rest : rest.substr(space + 1);
  }
  std::size_t p = close + 1;
  p += leading_blanks(std::string_view(body).substr(p));
  lead.lead = body.substr(0, p);
  return lead;
}

/// "name (type): rest" inside an Args-style section.
std::optional<Lead> section_entry(const std::string& body) {
  std::size_t p = 0;
  while (p < body.size() && body[p] == '*') ++p;
  std::size_t n = identifier_run(body, p);
  if (n == 0) return std::nullopt;
  // dotted names such as "os.error"
  std::size_t e = p + n;
  while (e < body.size() && body[e] == '.') {
    std::size_t more = identifier_run(body, e + 1);
    if (more == 0) break;
    e += 1 + more;
  }
  std::string name = body.substr(p, e - p);
  std::size_t q = e + leading_blanks(std::string_view(body).substr(e));
  if (q < body.size() && body[q] == '(') {
    auto close = body.find(')', q);
    if (close == std::string::npos) return std::nullopt;
    q = close + 1;
    q += leading_blanks(std::string_view(body).substr(q));
  }
  if (q >= body.size() || body[q] != ':') return std::nullopt;
  ++q;
  if (q < body.size() && !is_blank_char(body[q])) return std::nullopt;
  q += leading_blanks(std::string_view(body).substr(q));
  Lead lead;
  lead.kind = ParagraphKind::Tag;
  lead.slot = name;
  lead.lead = body.substr(0, q);
  return lead;
}

std::optional<Lead> list_marker(const std::string& body) {
  std::size_t p = 0;
  if (!body.empty() && (body[0] == '-' || body[0] == '*' || body[0] == '+')) {
    p = 1;
  } else {
    while (p < body.size() && body[p] >= '0' && body[p] <= '9') ++p;
    if (p == 0 || p >= body.size() || (body[p] != '.' && body[p] != ')')) {
      return std::nullopt;
    }
    ++p;
  }
  if (p >= body.size() || !is_blank_char(body[p])) return std::nullopt;
  p += leading_blanks(std::string_view(body).substr(p));
  Lead lead;
  lead.lead = body.substr(0, p);
  return lead;
}

bool is_rule_line(std::string_view body) {
  return body.size() >= 3 &&
         (body.find_first_not_of('-') == std::string_view::npos ||
          body.find_first_not_of('=') == std::string_view::npos);
}

std::string section_name(std::string_view body) {
  if (body.size() < 2 || body.back() != ':') return {};
  return std::string(body.substr(0, body.size() - 1));
}

bool ends_cjk(std::string_view s) {
  if (s.empty()) return false;
  std::u32string cps = to_utf32(s);
  return is_cjk(cps.back());
}

bool begins_cjk(std::string_view s) {
  std::size_t pos = 0;
  auto cp = decode_utf8(s, pos);
  return cp && is_cjk(*cp);
}

void append_joined(std::string& text, std::string_view piece) {
  if (piece.empty()) return;
  if (!text.empty() && !(ends_cjk(text) && begins_cjk(piece))) text += ' ';
  text += piece;
}

int width_of(const CommentLine& line) {
  return display_width(line.prefix + line.body + line.suffix);
}

void find_paragraphs(CommentBlock& block) {
  auto& lines = block.lines;
  std::vector<CommentParagraph>& out = block.paragraphs;
  CommentParagraph* current = nullptr;
  bool doctest = false;
  bool pre = false;
  enum class Section { None, Entries, Code, Text } section = Section::None;
  std::size_t section_depth = 0;
  std::size_t entry_depth = 0;

  auto open = [&](std::size_t i, ParagraphKind kind, std::string lead,
                  std::string slot) {
    CommentParagraph p;
    p.kind = kind;
    p.first = p.last = i;
    p.lead = std::move(lead);
    p.slot = std::move(slot);
    if (kind != ParagraphKind::Verbatim) {
      p.text = lines[i].body.substr(p.lead.size());
    }
    out.push_back(std::move(p));
    current = kind == ParagraphKind::Verbatim ? nullptr : &out.back();
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& body = lines[i].body;
    std::size_t depth = display_width(lines[i].prefix);
    if (i == 0) depth += static_cast<std::size_t>(block.start_col - 1);
    if (body.empty()) {
      current = nullptr;
      doctest = false;
      continue;
    }
    if (block.style == CommentStyle::LineComment && is_pragma(body)) {
      open(i, ParagraphKind::Verbatim, "", "");
      continue;
    }
    if (pre || body.find("<pre>") != std::string::npos) {
      pre = body.find("</pre>") == std::string::npos;
      open(i, ParagraphKind::Verbatim, "", "");
      continue;
    }
    if (doctest || starts_with(body, ">>>")) {
      doctest = true;
      open(i, ParagraphKind::Verbatim, "", "");
      continue;
    }
    if (block.style == CommentStyle::JavaDoc ||
        block.style == CommentStyle::BlockComment) {
      if (auto tag = javadoc_tag(body)) {
        open(i, tag->kind, tag->lead, tag->slot);
        continue;
      }
    }
    if (block.style == CommentStyle::DocString) {
      if (section != Section::None && depth <= section_depth) {
        section = Section::None;
      }
      std::string name = section_name(body);
      if (!name.empty() && (kEntrySections.count(name) ||
                            kTextSections.count(name) ||
                            kCodeSections.count(name))) {
        section = kEntrySections.count(name)  ? Section::Entries
                  : kCodeSections.count(name) ? Section::Code
                                              : Section::Text;
        section_depth = depth;
        entry_depth = 0;
        open(i, ParagraphKind::Verbatim, "", "");
        continue;
      }
      if (is_rule_line(body)) {
        open(i, ParagraphKind::Verbatim, "", "");
        continue;
      }
      if (section == Section::Code) {
        open(i, ParagraphKind::Verbatim, "", "");
        continue;
      }
      if (auto field = field_tag(body)) {
        open(i, field->kind, field->lead, field->slot);
        continue;
      }
      if (section == Section::Entries &&
          (entry_depth == 0 || depth <= entry_depth)) {
        if (auto entry = section_entry(body)) {
          entry_depth = depth;
          open(i, entry->kind, entry->lead, entry->slot);
          continue;
        }
      }
    }
    if (auto marker = list_marker(body)) {
      open(i, ParagraphKind::Text, marker->lead, "");
      continue;
    }
    if (current) {
      current->last = i;
      append_joined(current->text, body);
      continue;
    }
    open(i, ParagraphKind::Text, "", "");
  }
}

std::string most_common_prefix(const CommentBlock& block) {
  std::map<std::string, int> counts;
  std::vector<std::string> order;
  for (std::size_t i = 1; i < block.lines.size(); ++i) {
    const auto& line = block.lines[i];
    if (line.body.empty()) continue;
    if (counts[line.prefix]++ == 0) order.push_back(line.prefix);
  }
  if (block.style == CommentStyle::DocString && !order.empty()) {
    // Nested sections indent further than the docstring margin.
    return *std::min_element(order.begin(), order.end(),
                             [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }
  std::string best;
  int best_count = 0;
  for (const auto& p : order) {
    if (counts[p] > best_count) {
      best = p;
      best_count = counts[p];
    }
  }
  return best;
}

// -- placeholder protection ------------------------------------------------

std::string rename_words(std::string_view text, const TranslationMap& map) {
  std::string out;
  std::size_t p = 0;
  while (p < text.size()) {
    std::size_t n = identifier_run(text, p);
    if (n == 0) {
      std::size_t next = p;
      decode_utf8(text, next);
      if (next == p) next = p + 1;
      out.append(text.substr(p, next - p));
      p = next;
      continue;
    }
    std::string word(text.substr(p, n));
    const std::string* to = map.find(word);
    out += to && should_translate(word) ? *to : word;
    p += n;
  }
  return out;
}

struct Protected {
  std::string phrase;
  std::vector<std::string> restore;
};

Protected protect(std::string_view text, const TranslationMap& map) {
  Protected out;
  std::size_t p = 0;
  auto stash = [&](std::string value) {
    out.phrase += placeholder(out.restore.size());
    out.restore.push_back(std::move(value));
  };
  while (p < text.size()) {
    if (text.substr(p, 2) == "{@") {
      int depth = 0;
      std::size_t q = p;
      for (; q < text.size(); ++q) {
        if (text[q] == '{') ++depth;
        if (text[q] == '}' && --depth == 0) break;
      }
      if (q < text.size()) {
        stash(rename_words(text.substr(p, q + 1 - p), map));
        p = q + 1;
        continue;
      }
    }
    if (text[p] == '`') {
      std::size_t ticks = 0;
      while (p + ticks < text.size() && text[p + ticks] == '`') ++ticks;
      std::string fence(ticks, '`');
      auto close = text.find(fence, p + ticks);
      if (close != std::string_view::npos) {
        stash(rename_words(text.substr(p, close + ticks - p), map));
        p = close + ticks;
        continue;
      }
    }
    std::size_t n = identifier_run(text, p);
    if (n > 0) {
      std::string word(text.substr(p, n));
      const std::string* to = map.find(word);
      if (to && should_translate(word)) {
        stash(*to);
      } else {
        out.phrase += word;
      }
      p += n;
      continue;
    }
    std::size_t next = p;
    decode_utf8(text, next);
    if (next == p) next = p + 1;
    out.phrase.append(text.substr(p, next - p));
    p = next;
  }
  return out;
}

/// Splits backend output at placeholders. Fails if any placeholder went
/// missing, was duplicated or was invented.
std::optional<std::vector<Fragment>> restore(std::string_view translated,
                                             const Protected& prot) {
  std::vector<Fragment> out;
  std::vector<int> seen(prot.restore.size(), 0);
  std::size_t p = 0;
  std::string text;
  while (p < translated.size()) {
    if (translated.substr(p, kPlaceholderOpen.size()) == kPlaceholderOpen) {
      std::size_t q = p + kPlaceholderOpen.size();
      std::size_t digits = q;
      while (digits < translated.size() && translated[digits] >= '0' &&
             translated[digits] <= '9') {
        ++digits;
      }
      if (digits > q &&
          translated.substr(digits, kPlaceholderClose.size()) ==
              kPlaceholderClose) {
        std::size_t index = std::stoul(std::string(translated.substr(q, digits - q)));
        if (index >= prot.restore.size()) return std::nullopt;
        ++seen[index];
        if (!text.empty()) out.push_back({std::move(text), false});
        text.clear();
        out.push_back({prot.restore[index], true});
        p = digits + kPlaceholderClose.size();
        continue;
      }
    }
    text += translated[p];
    ++p;
  }
  if (!text.empty()) out.push_back({std::move(text), false});
  for (int s : seen) {
    if (s != 1) return std::nullopt;
  }
  return out;
}

std::string joined(const std::vector<Fragment>& fragments) {
  std::string out;
  for (const auto& f : fragments) out += f.text;
  return out;
}

/// Chinese and Japanese text has no spaces between words; drops single
/// spaces that the backend left beside restored identifiers.
void close_cjk_gaps(std::vector<Fragment>& fragments) {
  auto last_cp = [](const std::string& s) -> char32_t {
    std::u32string u = to_utf32(s);
    return u.empty() ? 0 : u.back();
  };
  auto first_cp = [](const std::string& s) -> char32_t {
    std::size_t pos = 0;
    auto cp = decode_utf8(s, pos);
    return cp ? *cp : 0;
  };
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    Fragment& f = fragments[i];
    if (f.identifier) continue;
    if (i > 0 && f.text.size() > 1 && f.text[0] == ' ' &&
        is_cjk(last_cp(fragments[i - 1].text)) && is_cjk(first_cp(f.text.substr(1)))) {
      f.text.erase(0, 1);
    }
    if (i + 1 < fragments.size() && f.text.size() > 1 && f.text.back() == ' ' &&
        is_cjk(first_cp(fragments[i + 1].text)) &&
        is_cjk(last_cp(f.text.substr(0, f.text.size() - 1)))) {
      f.text.pop_back();
    }
    if (f.text == " " && i > 0 && i + 1 < fragments.size() &&
        is_cjk(last_cp(fragments[i - 1].text)) &&
        is_cjk(first_cp(fragments[i + 1].text))) {
      f.text.clear();
    }
  }
  std::erase_if(fragments, [](const Fragment& f) { return f.text.empty(); });
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t p = 0;
  while ((p = s.find(from, p)) != std::string::npos) {
    s.replace(p, from.size(), to);
    p += to.size();
  }
}

std::string docstring_quote(const CommentBlock& block) {
  const std::string& prefix = block.lines.front().prefix;
  auto q = prefix.find_first_of("\"'");
  if (q == std::string::npos) return "\"\"\"";
  return prefix.substr(q, prefix.find_first_not_of(prefix[q], q) - q);
}

void sanitize(std::string& text, const CommentBlock& block,
              ProgrammingLanguage lang) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  if (block.style == CommentStyle::BlockComment ||
      block.style == CommentStyle::JavaDoc) {
    replace_all(text, "*/", "* /");
  }
  if (lang == ProgrammingLanguage::Java) {
    // An odd run of backslashes before 'u' starts a Unicode escape. Only
    // escapes that decode to a line break, '*' or '/' can end the comment.
    std::string out;
    std::size_t run = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == 'u' && run % 2 == 1) {
        std::size_t h = i;
        while (h < text.size() && text[h] == 'u') ++h;
        std::string hex = lowercase(text.substr(h, 4));
        if (hex == "000a" || hex == "000d" || hex == "002a" || hex == "002f") {
          out += '\\';
        }
      }
      run = c == '\\' ? run + 1 : 0;
      out += c;
    }
    text = std::move(out);
  }
  if (block.style == CommentStyle::DocString) {
    std::string quote = docstring_quote(block);
    if (quote.size() == 3) {
      std::string q3 = quote;
      std::string escaped = quote.substr(0, 2) + "\\" + quote.substr(2);
      replace_all(text, q3, escaped);
    } else {
      std::string out;
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == quote[0] && (i == 0 || text[i - 1] != '\\')) out += '\\';
        out += text[i];
      }
      text = std::move(out);
    }
  }
}

// -- layout ------------------------------------------------------------------

bool is_closing(char32_t cp) {
  static const std::u32string closers =
      U"，。、；：？！）」』】》〉〕…’”．,.;:!?)]}%";
  return closers.find(cp) != std::u32string::npos;
}

bool is_opening(char32_t cp) {
  static const std::u32string openers = U"（「『【《〈〔‘“([{";
  return openers.find(cp) != std::u32string::npos;
}

struct Atom {
  std::string text;
  int width = 0;
  bool space_before = false;
};

std::vector<Atom> make_atoms(const std::vector<Fragment>& fragments,
                             bool leading_space) {
  struct Cell {
    char32_t cp;
    int ident;
  };
  std::vector<Cell> cells;
  int ident = 0;
  for (const auto& f : fragments) {
    int id = f.identifier ? ++ident : -1;
    for (char32_t cp : to_utf32(f.text)) cells.push_back({cp, id});
  }
  std::vector<Atom> atoms;
  bool pending_space = leading_space;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.ident < 0 && is_space(c.cp)) {
      pending_space = true;
      continue;
    }
    bool start = atoms.empty() || pending_space;
    if (!start) {
      const Cell& prev = cells[i - 1];
      bool same_ident = c.ident >= 0 && c.ident == prev.ident;
      if (same_ident || is_closing(c.cp) || is_opening(prev.cp)) {
        start = false;
      } else if (is_cjk(c.cp) || is_cjk(prev.cp)) {
        start = true;
      }
    }
    if (start) {
      Atom a;
      a.space_before = pending_space && !atoms.empty();
      atoms.push_back(std::move(a));
    }
    append_utf8(atoms.back().text, c.cp);
    pending_space = false;
  }
  for (auto& a : atoms) a.width = display_width(a.text);
  return atoms;
}

std::string default_eol(const CommentBlock& block) {
  for (const auto& l : block.lines) {
    if (!l.eol.empty()) return l.eol;
  }
  return "\n";
}

void escape_docstring_end(CommentLine& line, const CommentBlock& block) {
  if (block.style != CommentStyle::DocString || line.suffix.empty()) return;
  std::string quote = docstring_quote(block);
  if (line.suffix.find(quote[0]) != 0) return;
  std::string& body = line.body;
  if (body.empty()) return;
  std::size_t run = 0;
  while (run < body.size() && body[body.size() - 1 - run] == '\\') ++run;
  if (run % 2 == 1) {
    body += ' ';
  } else if (body.back() == quote[0]) {
    body.insert(body.size() - 1, "\\");
  }
}

std::vector<CommentLine> layout(const CommentBlock& block,
                                const CommentParagraph& para,
                                std::vector<std::string>& warnings) {
  const CommentLine& first = block.lines[para.first];
  const CommentLine& last = block.lines[para.last];
  std::string eol = default_eol(block);
  int offset = para.first == 0 ? block.start_col - 1 : 0;

  std::string base = para.first == 0 ? block.margin : first.prefix;
  std::string cont = base;
  if (para.last > para.first) {
    cont = block.lines[para.first + 1].prefix;
  } else if (para.kind == ParagraphKind::Tag &&
             block.style == CommentStyle::DocString) {
    cont = base + "    ";
  }

  std::vector<Atom> atoms = make_atoms(para.output, false);
  int budget = block.max_width;

  struct Row {
    std::string prefix;
    std::string body;
    int width = 0;
    int offset = 0;
    std::size_t atoms = 0;
    std::vector<const Atom*> items;
  };
  std::vector<Row> rows;
  rows.push_back({first.prefix, para.new_lead,
                  offset + display_width(first.prefix + para.new_lead), offset,
                  0, {}});

  auto add = [&](const Atom& a) {
    Row& row = rows.back();
    int need = (row.atoms > 0 && a.space_before ? 1 : 0) + a.width;
    if (!block.wrappable || row.atoms == 0 || row.width + need <= budget) {
      row.body += (row.atoms > 0 && a.space_before) ? " " + a.text : a.text;
      row.width += need;
      ++row.atoms;
      row.items.push_back(&a);
      return;
    }
    rows.push_back({cont, a.text, display_width(cont) + a.width, 0, 1, {&a}});
  };
  for (const auto& a : atoms) add(a);

  // The closing decoration has to fit on the last row too.
  int suffix_width = display_width(last.suffix);
  if (block.wrappable && rows.back().atoms > 1 &&
      rows.back().width + suffix_width > budget) {
    Row& row = rows.back();
    const Atom* moved = row.items.back();
    row.items.pop_back();
    --row.atoms;
    row.body.clear();
    bool lead_row = rows.size() == 1;
    if (lead_row) row.body = para.new_lead;
    row.width = row.offset + display_width(row.prefix + row.body);
    std::size_t k = 0;
    for (const Atom* a : row.items) {
      bool sp = k > 0 && a->space_before;
      row.body += sp ? " " + a->text : a->text;
      row.width += (sp ? 1 : 0) + a->width;
      ++k;
    }
    rows.push_back({cont, moved->text, display_width(cont) + moved->width, 0, 1,
                    {moved}});
  }

  std::vector<CommentLine> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool is_last = r + 1 == rows.size();
    CommentLine line{rows[r].prefix, rows[r].body, is_last ? last.suffix : "",
                     is_last ? last.eol : eol};
    if (is_last) escape_docstring_end(line, block);
    int width = rows[r].offset + width_of(line);
    if (width > budget) {
      warnings.push_back("comment line " + std::to_string(para.first + r + 1) +
                         " is " + std::to_string(width) + " cells wide (limit " +
                         std::to_string(budget) + ")");
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::string CommentBlock::render() const {
  std::string out;
  for (const auto& line : lines) out += line.str();
  return out;
}

std::vector<int> CommentBlock::line_widths() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int w = width_of(lines[i]);
    if (i == 0) w += start_col - 1;
    out.push_back(w);
  }
  return out;
}

CommentBlock classify_comment(const SourceToken& token) {
  CommentBlock block;
  block.style = token.comment_style == CommentStyle::None
                    ? CommentStyle::BlockComment
                    : token.comment_style;
  block.start_col = std::max(1, token.col);
  bool ok = false;
  switch (block.style) {
    case CommentStyle::LineComment:
      ok = split_line_comment(token.text, block);
      break;
    case CommentStyle::BlockComment:
    case CommentStyle::JavaDoc:
      ok = split_block_comment(token.text, block);
      break;
    case CommentStyle::DocString:
      ok = split_docstring(token.text, block);
      break;
    case CommentStyle::None:
      break;
  }
  if (!ok) {
    block = CommentBlock{};
    block.style = CommentStyle::BlockComment;
    block.start_col = std::max(1, token.col);
    for (auto& raw : split_lines(token.text)) {
      block.lines.push_back({"", raw.content, "", raw.eol});
    }
    block.wrappable = false;
    block.max_width = 0;
    for (int w : block.line_widths()) block.max_width = std::max(block.max_width, w);
    return block;
  }

  for (int w : block.line_widths()) block.max_width = std::max(block.max_width, w);
  block.margin = most_common_prefix(block);
  if (block.margin.empty() && block.style != CommentStyle::LineComment) {
    std::string indent(static_cast<std::size_t>(block.start_col - 1), ' ');
    switch (block.style) {
      case CommentStyle::JavaDoc: block.margin = indent + " * "; break;
      case CommentStyle::BlockComment: block.margin = indent + "   "; break;
      default: block.margin = indent; break;
    }
  }
  find_paragraphs(block);
  for (const auto& p : block.paragraphs) {
    if (p.kind == ParagraphKind::Verbatim) continue;
    if (!block.text.empty()) block.text += "\n\n";
    block.text += p.text;
  }
  return block;
}

CommentBlock translate_comment(CommentBlock block, const TranslationMap& map,
                               const TranslationJob& job,
                               TranslationBackend& backend) {
  bool romanize = job.effective_translit_comments();
  for (auto& para : block.paragraphs) {
    if (para.kind == ParagraphKind::Verbatim) {
      para.output.clear();
      bool changed = false;
      for (std::size_t i = para.first; i <= para.last; ++i) {
        std::string renamed = rename_words(block.lines[i].body, map);
        changed = changed || renamed != block.lines[i].body;
        para.output.push_back({std::move(renamed), false});
      }
      para.changed = changed;
      continue;
    }

    para.new_lead = para.lead;
    if (!para.slot.empty()) {
      const std::string* to = map.find(para.slot);
      if (to && should_translate(para.slot)) {
        auto at = para.lead.find(para.slot);
        para.new_lead = para.lead.substr(0, at) + *to +
                        para.lead.substr(at + para.slot.size());
      }
    }

    Protected prot = protect(para.text, map);
    std::vector<Fragment> fragments;
    bool has_words = std::any_of(
        para.text.begin(), para.text.end(),
        [](char c) { return static_cast<unsigned char>(c) >= 0x80 || std::isalpha(static_cast<unsigned char>(c)); });
    std::optional<std::vector<Fragment>> restored;
    if (has_words && !prot.phrase.empty()) {
      auto result = backend.translate_phrase(prot.phrase, job.from_lang,
                                             job.to_lang,
                                             PartOfSpeechHint::none());
      restored = restore(result.text, prot);
      if (!restored) {
        block.warnings.push_back(
            "translation dropped identifier placeholders; kept original text");
      }
    }
    bool from_backend = restored.has_value();
    if (!restored) restored = restore(prot.phrase, prot);
    fragments = std::move(*restored);
    Script target = script_of_language(job.to_lang);
    if (from_backend && (target == Script::Chinese || target == Script::Japanese)) {
      close_cjk_gaps(fragments);
    }

    if (romanize) {
      std::string plain;
      for (const auto& f : fragments) {
        if (!f.identifier) plain += f.text;
      }
      Script script = detect_script(plain);
      if (has_romanization(script)) {
        for (auto& f : fragments) {
          if (!f.identifier) f.text = transliterate(f.text, script);
        }
      }
    }
    for (auto& f : fragments) {
      if (!f.identifier) sanitize(f.text, block, job.prog_lang);
    }
    para.changed = joined(fragments) != para.text || para.new_lead != para.lead;
    para.output = std::move(fragments);
  }
  return block;
}

CommentBlock reflow(CommentBlock block) {
  std::vector<CommentLine> lines;
  std::size_t next = 0;
  for (const auto& para : block.paragraphs) {
    while (next < para.first) lines.push_back(block.lines[next++]);
    if (!para.changed) {
      for (std::size_t i = para.first; i <= para.last; ++i) {
        lines.push_back(block.lines[i]);
      }
    } else if (para.kind == ParagraphKind::Verbatim) {
      for (std::size_t i = para.first; i <= para.last; ++i) {
        CommentLine line = block.lines[i];
        line.body = para.output[i - para.first].text;
        lines.push_back(std::move(line));
      }
    } else {
      auto laid = layout(block, para, block.warnings);
      lines.insert(lines.end(), laid.begin(), laid.end());
    }
    next = para.last + 1;
  }
  while (next < block.lines.size()) lines.push_back(block.lines[next++]);
  block.lines = std::move(lines);
  block.paragraphs.clear();
  return block;
}

std::string translate_comment_text(const SourceToken& token,
                                   const TranslationMap& map,
                                   const TranslationJob& job,
                                   TranslationBackend& backend,
                                   std::vector<std::string>* warnings) {
  CommentBlock block = classify_comment(token);
  block = reflow(translate_comment(std::move(block), map, job, backend));
  if (warnings) {
    for (auto& w : block.warnings) {
      warnings->push_back(std::to_string(token.line) + ":" +
                          std::to_string(token.col) + ": " + w);
    }
  }
  return block.render();
}

}  // namespace codeintl
