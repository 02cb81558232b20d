#include <gtest/gtest.h>

#include <json.hpp>

#include "codeintl/backend.hpp"
#include "codeintl/errors.hpp"
#include "codeintl/identifiers.hpp"
#include "test_util.hpp"

using namespace codeintl;

namespace {

const char* kRows =
    "en\tes\tmove\tmoverse\tverb\tinfinitive\n"
    "en\tes\tmove\tmueve\tverb\timperative\n"
    "en\tes\tmove\tmovimiento\tnoun\n"
    "en\tes\tturn around\tmedia vuelta\tverb\n"
    "en\tes\tthe\tel\n"
    "en\tes\tit\t\n"
    "en\tes\trobot\trobot\n"
    "# comment line\n"
    "en\tzh\tmove\t移动\n";

class CountingBackend : public TranslationBackend {
 public:
  std::string id() const override { return "counting"; }
  PhraseTranslation translate_phrase(const std::string& phrase, const std::string&,
                                     const std::string&,
                                     const PartOfSpeechHint&) override {
    ++calls;
    return {"<" + phrase + ">", 1.0};
  }
  LanguageGuess detect_language(std::string_view) override { return {"en", 1.0}; }
  std::atomic<int> calls{0};
};

}  // namespace

TEST(PrimarySubtag, Examples) {
  EXPECT_EQ(primary_subtag("zh-Hans-CN"), "zh");
  EXPECT_EQ(primary_subtag("ES"), "es");
  EXPECT_EQ(primary_subtag("en_US"), "en");
}

TEST(Hint, KeysRoundTrip) {
  for (auto hint : {PartOfSpeechHint::none(), PartOfSpeechHint::verb(Tense::Infinitive),
                    PartOfSpeechHint::verb(Tense::Imperative),
                    PartOfSpeechHint::verb(Tense::ThirdPersonPresent)}) {
    EXPECT_EQ(PartOfSpeechHint::from_key(hint.key()), hint) << hint.key();
  }
  EXPECT_EQ(PartOfSpeechHint::none().key(), "none");
}

TEST(Dictionary, VerbPriorAndTense) {
  auto dict = DictionaryBackend::from_string(kRows);
  auto inf = dict.translate_phrase("move", "en", "es", PartOfSpeechHint::verb(Tense::Infinitive));
  EXPECT_EQ(inf.text, "moverse");
  EXPECT_EQ(inf.confidence, 1.0);
  auto imp = dict.translate_phrase("move", "en", "es", PartOfSpeechHint::verb(Tense::Imperative));
  EXPECT_EQ(imp.text, "mueve");
  auto noun = dict.translate_phrase("move", "en", "es", PartOfSpeechHint::none());
  EXPECT_EQ(noun.text, "movimiento");
  auto third = dict.translate_phrase("turn around", "en", "es",
                                     PartOfSpeechHint::verb(Tense::ThirdPersonPresent));
  EXPECT_EQ(third.text, "media vuelta");
}

TEST(Dictionary, PhrasesAndUnknownWords) {
  auto dict = DictionaryBackend::from_string(kRows);
  auto r = dict.translate_phrase("move the robot", "en", "es", PartOfSpeechHint::none());
  EXPECT_EQ(r.text, "movimiento el robot");
  EXPECT_EQ(r.confidence, 1.0);
  auto dropped = dict.translate_phrase("move it", "en", "es", PartOfSpeechHint::none());
  EXPECT_EQ(dropped.text, "movimiento");
  auto partial = dict.translate_phrase("frac robot", "en", "es", PartOfSpeechHint::none());
  EXPECT_EQ(partial.text, "frac robot");
  EXPECT_DOUBLE_EQ(partial.confidence, 0.5);
  auto keep = dict.translate_phrase("⟦0⟧ move, ⟦1⟧.", "en", "es", PartOfSpeechHint::none());
  EXPECT_EQ(keep.text, "⟦0⟧ movimiento, ⟦1⟧.");
}

TEST(Dictionary, ReverseDirection) {
  auto dict = DictionaryBackend::from_string(kRows);
  EXPECT_TRUE(dict.has_pair("en", "zh"));
  auto back = dict.translate_phrase("移动", "zh", "en", PartOfSpeechHint::none());
  EXPECT_EQ(back.text, "move");
  EXPECT_EQ(dict.translate_phrase("move", "en", "en", {}).text, "move");
}

TEST(Dictionary, BundledFile) {
  DictionaryBackend dict(default_dictionary_path());
  EXPECT_TRUE(dict.has_pair("en", "es"));
  EXPECT_TRUE(dict.has_pair("en", "zh"));
  EXPECT_TRUE(dict.has_pair("en", "ar"));
  EXPECT_EQ(dict.lookup("en", "es", "frac"), nullptr);
  EXPECT_EQ(dict.lookup("en", "es", "pct"), nullptr);
  EXPECT_NE(dict.lookup("en", "es", "turn around"), nullptr);
  EXPECT_THROW(DictionaryBackend("/nonexistent/dict.tsv"), ConfigError);
}

TEST(Dictionary, DetectLanguage) {
  DictionaryBackend dict(default_dictionary_path());
  auto zh = dict.detect_language("斐波那契数列");
  EXPECT_EQ(zh.lang, "zh");
  EXPECT_GT(zh.confidence, 0.5);
  EXPECT_EQ(dict.detect_language("ひらがなと漢字").lang, "ja");
  EXPECT_EQ(dict.detect_language("حركة").lang, "ar");
  auto en = dict.detect_language("move the robot to the wall");
  EXPECT_EQ(en.lang, "en");
  EXPECT_GT(en.confidence, 0.5);
  EXPECT_EQ(dict.detect_language("12 + 3").confidence, 0.0);
}

TEST(Identity, Passthrough) {
  IdentityBackend id;
  auto r = id.translate_phrase("anything at all", "en", "en", {});
  EXPECT_EQ(r.text, "anything at all");
  EXPECT_EQ(r.confidence, 1.0);
}

TEST(MakeBackend, Specs) {
  EXPECT_EQ(make_backend("identity")->id(), "identity");
  EXPECT_NE(make_backend("dict:")->id().find("dict:"), std::string::npos);
  EXPECT_NE(make_backend("service:http://127.0.0.1:1")->id().find("service:"),
            std::string::npos);
  EXPECT_THROW(make_backend("carrier-pigeon"), ConfigError);
  EXPECT_THROW(make_backend("service:ftp://x"), ConfigError);
}

TEST(Cache, MemoizesAndCounts) {
  auto inner = std::make_shared<CountingBackend>();
  CachedBackend cache(inner);
  std::vector<std::string> phrases{"a b", "c", "a b", "c", "d"};
  cache.translate_batch(phrases, "en", "es", {});
  EXPECT_EQ(inner->calls, 3);
  EXPECT_EQ(cache.backend_calls(), 3u);
  cache.translate_phrase("c", "en", "es", {});
  EXPECT_EQ(inner->calls, 3);
  cache.translate_phrase("c", "en", "zh", {});
  cache.translate_phrase("c", "en", "es", PartOfSpeechHint::verb(Tense::Infinitive));
  EXPECT_EQ(inner->calls, 5);
  EXPECT_EQ(cache.size(), 5u);
  EXPECT_TRUE(cache.store_path().empty());
}

TEST(Cache, PersistsAcrossInstances) {
  auto dir = testutil::scratch("cache_persist");
  auto inner = std::make_shared<CountingBackend>();
  {
    CachedBackend cache(inner, dir);
    cache.translate_phrase(phrase_of(segment("move")), "en", "es", {});
    cache.translate_phrase(phrase_of(segment("Move")), "en", "es", {});
    cache.flush();
  }
  EXPECT_EQ(inner->calls, 1);
  auto doc = nlohmann::json::parse(testutil::read(dir / "translations.json"));
  EXPECT_EQ(doc.at("entries").size(), 1u);

  CachedBackend again(inner, dir);
  auto r = again.translate_phrase("move", "en", "es", {});
  EXPECT_EQ(r.text, "<move>");
  EXPECT_EQ(inner->calls, 1);
  EXPECT_EQ(again.hits(), 1u);
  EXPECT_TRUE(again.warnings().empty());
}

TEST(Cache, CorruptStoreIsRebuilt) {
  auto dir = testutil::scratch("cache_corrupt");
  testutil::write(dir / "translations.json", "{ this is not json");
  auto inner = std::make_shared<CountingBackend>();
  CachedBackend cache(inner, dir);
  ASSERT_EQ(cache.warnings().size(), 1u);
  EXPECT_NE(cache.warnings()[0].find("corrupt"), std::string::npos);
  cache.translate_phrase("x y", "en", "es", {});
  cache.flush();
  auto doc = nlohmann::json::parse(testutil::read(dir / "translations.json"));
  EXPECT_EQ(doc.at("entries").size(), 1u);
}

TEST(Cache, DistinctBackendsDoNotShareEntries) {
  auto dir = testutil::scratch("cache_ids");
  auto counting = std::make_shared<CountingBackend>();
  {
    CachedBackend cache(counting, dir);
    cache.translate_phrase("move", "en", "es", {});
    cache.flush();
  }
  CachedBackend other(std::make_shared<IdentityBackend>(), dir);
  EXPECT_EQ(other.translate_phrase("move", "en", "es", {}).text, "move");
}

TEST(Service, AgainstStubServer) {
  auto dict = std::make_shared<DictionaryBackend>(DictionaryBackend::from_string(kRows));
  StubServer server(dict);
  int port = server.start();
  ASSERT_GT(port, 0);
  ServiceBackend client("http://127.0.0.1:" + std::to_string(port));
  auto r = client.translate_phrase("move", "en", "es",
                                   PartOfSpeechHint::verb(Tense::Infinitive));
  EXPECT_EQ(r.text, "moverse");
  std::vector<std::string> phrases{"move", "turn around", "frac"};
  auto batch = client.translate_batch(phrases, "en", "es", PartOfSpeechHint::none());
  ASSERT_EQ(batch.size(), 3u);
  EXPECT_EQ(batch[0].text, "movimiento");
  EXPECT_EQ(batch[1].text, "media vuelta");
  EXPECT_EQ(batch[2].text, "frac");
  EXPECT_EQ(batch[2].confidence, 0.0);
  EXPECT_EQ(client.detect_language("移动").lang, "zh");
  EXPECT_EQ(client.requests(), 3u);
  EXPECT_EQ(server.requests(), 3u);
  server.stop();
}

TEST(Service, Unavailable) {
  StubServer probe(std::make_shared<IdentityBackend>());
  int port = probe.start();
  probe.stop();
  ServiceBackend client("http://127.0.0.1:" + std::to_string(port));
  EXPECT_THROW(client.translate_phrase("move", "en", "es", {}), BackendUnavailable);
  EXPECT_THROW(client.detect_language("move"), BackendUnavailable);
}
