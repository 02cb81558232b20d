#include <gtest/gtest.h>

#include "codeintl/errors.hpp"
#include "codeintl/lexing.hpp"
#include "codeintl/transliteration.hpp"
#include "codeintl/unicode.hpp"

using namespace codeintl;

namespace {

bool lexes_as_one_identifier(const std::string& name, ProgrammingLanguage lang) {
  auto tokens = lex(name, lang);
  return tokens.size() == 1 && is_identifier(tokens[0].kind);
}

}  // namespace

TEST(Transliterate, KnownNames) {
  EXPECT_EQ(transliterate("斐波那契", Script::Chinese), "feibonaqie");
  EXPECT_EQ(transliterate("计数", Script::Chinese), "jishu");
  EXPECT_EQ(transliterate("移动", Script::Chinese), "yidong");
  std::string ahmad = transliterate("أحمد", Script::Arabic);
  EXPECT_NE(ahmad.find('7'), std::string::npos) << ahmad;
  EXPECT_TRUE(is_ascii(ahmad));
  EXPECT_EQ(transliterate("ح", Script::Arabic), "7");
}

TEST(Transliterate, AsciiFixedPoint) {
  for (Script s : {Script::Arabic, Script::Hebrew, Script::Chinese, Script::Japanese,
                   Script::Korean, Script::Russian}) {
    EXPECT_EQ(transliterate("abc", s), "abc");
    EXPECT_EQ(transliterate("a_b 9", s), "a_b 9");
  }
}

TEST(Transliterate, OtherScripts) {
  EXPECT_EQ(transliterate("число", Script::Russian), "chislo");
  EXPECT_EQ(transliterate("한국", Script::Korean), "hanguk");
  EXPECT_EQ(transliterate("かな", Script::Japanese), "kana");
  EXPECT_TRUE(is_ascii(transliterate("שלום", Script::Hebrew)));
  EXPECT_EQ(transliterate("，", Script::Chinese), ",");
  EXPECT_EQ(transliterate("é", Script::Chinese), "e");
  EXPECT_EQ(transliterate("α", Script::Chinese), "_");
}

TEST(Transliterate, NoTable) {
  EXPECT_FALSE(has_romanization(Script::Latin));
  EXPECT_THROW(transliterate("abc", Script::Latin), UnsupportedScript);
  EXPECT_THROW(transliterate("abc", Script::Other), UnsupportedScript);
}

TEST(Transliterate, Tables) {
  Transliterator t;
  EXPECT_EQ(t.table(Script::Arabic).rules().at(U"ح"), "7");
  EXPECT_GT(t.table(Script::Chinese).size(), 1000u);
  const std::string* ascii = nullptr;
  std::u32string text = U"斐波";
  EXPECT_EQ(t.table(Script::Chinese).match(text, 0, &ascii), 1u);
  EXPECT_EQ(*ascii, "fei");
}

TEST(TransliterateIdentifier, Examples) {
  EXPECT_EQ(transliterate_identifier(segment("移动"), Script::Chinese), "yidong");
  EXPECT_EQ(transliterate_identifier(segment("计数"), Script::Chinese), "jishu");
  EXPECT_EQ(transliterate_identifier(segment("countWords"), Script::Chinese), "countWords");
  EXPECT_EQ(transliterate_identifier(segment("countWords计数"), Script::Chinese),
            "countWordsJishu");
  std::string ha = transliterate_identifier(segment("حركة"), Script::Arabic);
  EXPECT_TRUE(lexes_as_one_identifier(ha, ProgrammingLanguage::Java)) << ha;
  std::string seven = transliterate_identifier(segment("ح"), Script::Arabic);
  EXPECT_EQ(seven, "_7");
}

TEST(TransliterateIdentifier, AsciiAndRelexes) {
  const char* names[] = {"斐波那契", "计数", "移动", "حركة", "أحمد", "شالوم",
                         "שלום",     "משתנה", "число", "счётчик", "변수", "かず",
                         "カウント", "数え", "الرقم_الأول", "计数器Value"};
  Script scripts[] = {Script::Chinese, Script::Chinese, Script::Chinese, Script::Arabic,
                      Script::Arabic,  Script::Arabic,  Script::Hebrew,  Script::Hebrew,
                      Script::Russian, Script::Russian, Script::Korean,  Script::Japanese,
                      Script::Japanese, Script::Japanese, Script::Arabic, Script::Chinese};
  for (std::size_t i = 0; i < std::size(names); ++i) {
    for (auto lang : {ProgrammingLanguage::Java, ProgrammingLanguage::Python}) {
      std::string out = transliterate_identifier(segment(names[i]), scripts[i], lang);
      EXPECT_TRUE(is_ascii(out)) << names[i] << " -> " << out;
      EXPECT_TRUE(lexes_as_one_identifier(out, lang)) << names[i] << " -> " << out;
      for (char c : out) {
        EXPECT_TRUE(std::isalnum(static_cast<unsigned char>(c)) || c == '_') << out;
      }
      EXPECT_EQ(transliterate_identifier(segment(out), scripts[i], lang), out);
    }
  }
}

TEST(DetectScript, Examples) {
  EXPECT_EQ(detect_script("移动"), Script::Chinese);
  EXPECT_EQ(detect_script("mediaVuelta"), Script::Latin);
  EXPECT_EQ(detect_script("числоX"), Script::Russian);
  EXPECT_EQ(detect_script("かな漢字"), Script::Japanese);
  EXPECT_EQ(detect_script("حركة"), Script::Arabic);
  EXPECT_EQ(detect_script("שלום"), Script::Hebrew);
  EXPECT_EQ(detect_script("한국어"), Script::Korean);
  EXPECT_EQ(detect_script("123 !"), Script::None);
  EXPECT_EQ(detect_script(""), Script::None);
  EXPECT_EQ(detect_script("число 移动"), Script::Mixed);
  EXPECT_EQ(detect_script("número"), Script::Latin);
}

TEST(Scripts, Direction) {
  EXPECT_TRUE(is_rtl(Script::Arabic));
  EXPECT_TRUE(is_rtl(Script::Hebrew));
  EXPECT_FALSE(is_rtl(Script::Chinese));
  EXPECT_EQ(to_string(Script::Chinese), "Chinese");
}
