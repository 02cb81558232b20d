#include <gtest/gtest.h>

#include "codeintl/backend.hpp"
#include "codeintl/errors.hpp"
#include "codeintl/translator.hpp"

using namespace codeintl;

namespace {

SymbolTable table_of(const std::string& src, ProgrammingLanguage lang) {
  return classify_identifiers(lex(src, lang), lang).symbols;
}

TranslationJob es_job() {
  TranslationJob job;
  job.from_lang = "en";
  job.to_lang = "es";
  return job;
}

DictionaryBackend& dictionary() {
  static DictionaryBackend backend(default_dictionary_path());
  return backend;
}

std::string renamed(const std::string& src, const TranslationMap& map) {
  auto tokens = classify_identifiers(lex(src, ProgrammingLanguage::Java),
                                     ProgrammingLanguage::Java);
  return join_tokens(apply_renaming(tokens.tokens, map));
}

}  // namespace

TEST(CollectTargets, UnionInDeclarationOrder) {
  std::vector<SymbolTable> tables{
      table_of("void move() {}", ProgrammingLanguage::Java),
      table_of("void move() {} void turnAround() {}", ProgrammingLanguage::Java)};
  EXPECT_EQ(collect_targets(tables), (std::vector<std::string>{"move", "turnAround"}));
  EXPECT_TRUE(collect_targets({}).empty());
  std::vector<SymbolTable> one{table_of(
      "class R { int getHeight() { return 0; } void setHeight(int h) {} }",
      ProgrammingLanguage::Java)};
  auto targets = collect_targets(one);
  std::vector<std::string> methods;
  for (const auto& t : targets) {
    if (t == "getHeight" || t == "setHeight") methods.push_back(t);
  }
  EXPECT_EQ(methods, (std::vector<std::string>{"getHeight", "setHeight"}));
}

TEST(ShouldTranslate, Examples) {
  EXPECT_FALSE(should_translate("i"));
  EXPECT_TRUE(should_translate("数"));
  EXPECT_TRUE(should_translate("dx"));
  EXPECT_FALSE(should_translate("_"));
  EXPECT_FALSE(should_translate("_x_"));
  EXPECT_FALSE(should_translate("ч"));
}

TEST(PreferredTense, Examples) {
  EXPECT_EQ(preferred_tense("es"), Tense::Infinitive);
  EXPECT_EQ(preferred_tense("en"), Tense::Imperative);
  EXPECT_EQ(preferred_tense("de"), Tense::Imperative);
  EXPECT_EQ(preferred_tense("pt-BR"), Tense::Infinitive);
  EXPECT_EQ(preferred_tense("zh"), Tense::Imperative);
}

TEST(RoleOf, Examples) {
  EXPECT_EQ(role_of("Robot", kDeclType), IdentifierRole::Class);
  EXPECT_EQ(role_of("move", kDeclMethod), IdentifierRole::Method);
  EXPECT_EQ(role_of("MAX_STEPS", kDeclVariable), IdentifierRole::Constant);
  EXPECT_EQ(role_of("steps", kDeclVariable), IdentifierRole::Variable);
}

TEST(TranslateIdentifier, WorkedExamples) {
  auto job = es_job();
  TranslationMap map("en", "es");
  EXPECT_EQ(translate_identifier("move", IdentifierRole::Method, job, map, dictionary()),
            "moverse");
  EXPECT_EQ(translate_identifier("turnAround", IdentifierRole::Method, job, map,
                                 dictionary()),
            "mediaVuelta");
  EXPECT_EQ(translate_identifier("move", IdentifierRole::Variable, job, map, dictionary()),
            "moverse");
  TranslationMap fresh("en", "es");
  EXPECT_EQ(translate_identifier("move", IdentifierRole::Variable, job, fresh,
                                 dictionary()),
            "movimiento");
}

TEST(TranslateIdentifier, Untranslatable) {
  auto job = es_job();
  TranslationMap map("en", "es");
  IdentifierTranslator translator(job, map, dictionary());
  EXPECT_EQ(translator.translate("frac", IdentifierRole::Variable), "frac");
  EXPECT_EQ(translator.translate("pct", IdentifierRole::Variable), "pct");
  EXPECT_EQ(translator.untranslatable(), (std::vector<std::string>{"frac", "pct"}));
  EXPECT_EQ(*map.find("frac"), "frac");
}

TEST(TranslateIdentifier, ImperativeForOtherLanguages) {
  TranslationJob job;
  job.from_lang = "en";
  job.to_lang = "ar";
  job.translit_identifiers = false;
  TranslationMap map("en", "ar");
  EXPECT_EQ(translate_identifier("move", IdentifierRole::Method, job, map, dictionary()),
            "إمشِ");
  job.translit_identifiers = std::nullopt;
  TranslationMap romanized("en", "ar");
  std::string name =
      translate_identifier("move", IdentifierRole::Method, job, romanized, dictionary());
  EXPECT_EQ(name, "emshi");
}

TEST(TranslateIdentifier, PriorEntriesWin) {
  auto job = es_job();
  TranslationMap map("en", "es");
  map.set_prior("move", "caminar");
  EXPECT_EQ(translate_identifier("move", IdentifierRole::Method, job, map, dictionary()),
            "caminar");
  EXPECT_EQ(map.origin("move"), EntryOrigin::Prior);
}

TEST(ResolveCollision, Examples) {
  TranslationMap map("en", "es");
  map.add_computed("value", "valor");
  EXPECT_EQ(resolve_collision("valor", map, ProgrammingLanguage::Java, {}, "worth"),
            "valor2");
  EXPECT_EQ(resolve_collision("valor", map, ProgrammingLanguage::Java, {}, "value"),
            "valor");
  EXPECT_EQ(resolve_collision("si", map, ProgrammingLanguage::Java), "si");
  EXPECT_EQ(resolve_collision("for", map, ProgrammingLanguage::Java), "for2");
  EXPECT_EQ(resolve_collision("for_", map, ProgrammingLanguage::Python, {"for_"}), "for2_");
  map.add_computed("worth", "valor2");
  EXPECT_EQ(resolve_collision("valor", map, ProgrammingLanguage::Java, {}, "price"),
            "valor3");
  EXPECT_EQ(resolve_collision("lista", map, ProgrammingLanguage::Java, {"lista"}, "list"),
            "lista2");
}

TEST(TranslateIdentifier, CollisionThroughTranslator) {
  auto job = es_job();
  TranslationMap map("en", "es");
  IdentifierTranslator translator(job, map, dictionary());
  EXPECT_EQ(translator.translate("value", IdentifierRole::Variable), "valor");
  EXPECT_EQ(translator.translate("worth", IdentifierRole::Variable), "valor2");
  EXPECT_EQ(translator.collisions(), 1u);
  EXPECT_TRUE(map.is_injective());
}

TEST(ApplyRenaming, Examples) {
  TranslationMap map("en", "es");
  map.add_computed("move", "moverse");
  map.add_computed("run", "run");
  EXPECT_EQ(renamed("void move() {} void run() { move(); }", map),
            "void moverse() {} void run() { moverse(); }");

  TranslationMap same;
  same.add_computed("xs", "xs");
  std::string plain = "import java.util.List;\nList<String> xs;";
  EXPECT_EQ(renamed(plain, same), plain);

  TranslationMap back("zh", "en");
  back.add_computed("feibonaqie", "fibonacci");
  std::string src = "int feibonaqie(int n) { return feibonaqie(n); }";
  std::string out = renamed(src, back);
  EXPECT_EQ(out, "int fibonacci(int n) { return fibonacci(n); }");
}

TEST(ApplyRenaming, KeepsTokenShapeAndShortNames) {
  TranslationMap map("en", "es");
  map.add_computed("count", "cuenta");
  std::string src = "int count(int i) { for (int i = 0; i < 3; i++) {} return 0; }";
  auto tokens = classify_identifiers(lex(src, ProgrammingLanguage::Java),
                                     ProgrammingLanguage::Java);
  auto out = apply_renaming(tokens.tokens, map);
  ASSERT_EQ(out.size(), tokens.tokens.size());
  for (std::size_t k = 0; k < out.size(); ++k) EXPECT_EQ(out[k].kind, tokens.tokens[k].kind);
  EXPECT_EQ(join_tokens(out),
            "int cuenta(int i) { for (int i = 0; i < 3; i++) {} return 0; }");
}

TEST(ApplyRenaming, MissingEntry) {
  TranslationMap map("en", "es");
  EXPECT_THROW(renamed("void move() {}", map), MissingEntry);
}

TEST(TranslationMap, JsonRoundTrip) {
  TranslationMap map("en", "es");
  map.set_prior("move", "moverse");
  map.add_computed("turnAround", "mediaVuelta");
  map.add_computed("número", "número");
  std::string json = map.to_json();
  TranslationMap back = TranslationMap::from_json(json);
  EXPECT_EQ(back.entries(), map.entries());
  EXPECT_EQ(back.origin("move"), EntryOrigin::Prior);
  EXPECT_EQ(back.origin("turnAround"), EntryOrigin::Computed);
  EXPECT_TRUE(back.is_fixed("turnAround"));
  EXPECT_EQ(back.to_json(), json);
  EXPECT_EQ(json.back(), '\n');
  EXPECT_THROW(TranslationMap::from_json("{not json"), ConfigError);
  EXPECT_THROW(TranslationMap::from_json("{\"entries\": 3}"), ConfigError);
}

TEST(TranslationMap, FixedEntries) {
  TranslationMap map("en", "es");
  map.set_prior("move", "caminar");
  EXPECT_FALSE(map.add_computed("move", "moverse"));
  EXPECT_EQ(*map.find("move"), "caminar");
  EXPECT_EQ(*map.source_of("caminar"), "move");
  auto inv = map.inverted();
  EXPECT_EQ(inv.source_lang(), "es");
  EXPECT_EQ(*inv.find("caminar"), "move");
  map.add_computed("walk", "caminar");
  EXPECT_FALSE(map.is_injective());
}

TEST(Divergences, SharedSegments) {
  TranslationMap map("en", "es");
  map.add_computed("getHeight", "obtenerAltura");
  map.add_computed("setHeight", "establecerAltura");
  EXPECT_TRUE(shared_segment_divergences(map).empty());
  map.add_computed("heightLimit", "limiteDeTalla");
  auto d = shared_segment_divergences(map);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NE(d[0].find("height"), std::string::npos);
}
