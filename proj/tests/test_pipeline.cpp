#include <gtest/gtest.h>

#include "ontomt/pipeline.hpp"
#include "ontomt/trace_report.hpp"
#include "properties.hpp"
#include "test_support.hpp"

using namespace ontomt;

namespace {

const char* kEnglishGolden = "The point where images were projected on a screen in a darkened theatre";
const char* kArabicGolden = "وبعد الاسلام أصبحت شبام مدينة عامرة";

std::string item_text(const TranslationTrace& t, const std::string& surface) {
  for (const auto& it : t.items) {
    if (it.source_surface == surface) return it.target_text;
  }
  return "<missing>";
}

}  // namespace

TEST(Pipeline, EnglishGoldenTrace) {
  const auto r = translate(kEnglishGolden, testsupport::resources());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.language, Language::English);
  EXPECT_EQ(r.context, "Cinema");
  ASSERT_EQ(r.sentences.size(), 1u);
  const auto& t = r.sentences[0];
  EXPECT_TRUE(t.parse_from_store);
  std::map<std::string, int> counts;
  for (const auto& sc : t.sense_counts) counts[sc.surface] = sc.count.value_or(-1);
  EXPECT_EQ(counts["point"], 31);
  EXPECT_EQ(counts["images"], 19);
  EXPECT_EQ(counts["projected"], 29);
  EXPECT_EQ(counts["the"], 1);
  EXPECT_EQ(counts["theater"], 6);
  EXPECT_EQ(item_text(t, "theater"), "مسرح");
  EXPECT_EQ(item_text(t, "darkened"), "مظلم");
  EXPECT_EQ(item_text(t, "where"), "التي فيها");
  EXPECT_EQ(t.replaced, "ال النقطة التي فيها الصور كانت عرض على شاشة في مظلم مسرح");
  EXPECT_EQ(t.reordered, "النقطة التي فيها يتم عرض الصور على شاشة في مسرح مظلم");
  EXPECT_EQ(r.output, "النقطة التي فيها يتم عرض الصور على شاشة في مسرح مظلم");
}

TEST(Pipeline, ArabicGoldenTrace) {
  const auto r = translate(kArabicGolden, testsupport::resources());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.language, Language::Arabic);
  EXPECT_EQ(r.context, "Shibam");
  const auto& t = r.sentences.at(0);
  EXPECT_EQ(t.replaced, "After Islam, became Shibam city populated.");
  EXPECT_EQ(r.output, "After Islam, Shibam became a populated city.");
  EXPECT_LE(t.reorder_passes, 10u);
}

TEST(Pipeline, Deterministic) {
  const auto& res = testsupport::resources();
  const auto a = format_kv(translate(kEnglishGolden, res));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(format_kv(translate(kEnglishGolden, res)), a);
}

TEST(Pipeline, EmptyAndLetterlessInput) {
  const auto& res = testsupport::resources();
  auto r = translate("  \n ", res);
  ASSERT_TRUE(r.fatal);
  EXPECT_EQ(r.fatal->kind, ErrorKind::EmptyInput);
  r = translate("123 ?!", res);
  ASSERT_TRUE(r.fatal);
  EXPECT_EQ(r.fatal->kind, ErrorKind::NoLetters);
}

TEST(Pipeline, ContextOverride) {
  const auto& res = testsupport::resources();
  TranslateOptions opt;
  opt.context = "globalization";
  auto r = translate("capital", res, opt);
  EXPECT_EQ(r.context, "Globalization");
  EXPECT_EQ(r.output, "رأس المال");
  opt.context = "Astronomy";
  r = translate("capital", res, opt);
  ASSERT_TRUE(r.fatal);
  EXPECT_EQ(r.fatal->kind, ErrorKind::ContextUnregistered);
}

TEST(Pipeline, MultiSentenceInput) {
  const auto& res = testsupport::resources();
  TranslateOptions opt;
  opt.context = "Globalization";
  const auto r = translate("Globalization changed the market. Globalization changed the market.", res, opt);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.sentences.size(), 2u);
  EXPECT_EQ(r.output, r.sentences[0].reordered.value() + " " + r.sentences[1].reordered.value());
}

TEST(Pipeline, UnknownWordsAreMarkedNotFatal) {
  const auto& res = testsupport::resources();
  TranslateOptions opt;
  opt.source = Language::English;
  opt.context = "Cinema";
  const auto r = translate("the zebra waited", res, opt);
  EXPECT_FALSE(r.fatal);
  ASSERT_TRUE(r.first_error());
  EXPECT_EQ(r.first_error()->kind, ErrorKind::WordUnknown);
  EXPECT_NE(r.output.find("[[zebra]]"), std::string::npos);
}

TEST(Pipeline, HomographCarriers) {
  const auto cases = props::homograph_cases(testsupport::resources().ontologies);
  EXPECT_GE(cases.size(), 10u);
  for (const auto& hc : cases) {
    const auto o = props::check_homograph(hc, testsupport::resources());
    EXPECT_TRUE(o.ok) << hc.word << " / " << hc.context << " -> " << o.output;
  }
}

TEST(Pipeline, CorpusConservation) {
  const auto& corpus = testsupport::shipped().corpus.value();
  const auto outcomes = props::corpus_conservation(corpus, testsupport::resources());
  EXPECT_GE(outcomes.size(), corpus.size());
  for (const auto& o : outcomes) {
    EXPECT_TRUE(o.conserved) << o.sentence << " " << o.detail;
    EXPECT_LE(o.passes, 10u) << o.sentence;
  }
}

TEST(TraceReport, ReportRows) {
  const auto report = format_report(translate(kArabicGolden, testsupport::resources()));
  EXPECT_NE(report.find("Language Identification: " + std::string(kArabicGolden) + ": Arabic Source, Shibam Context"),
            std::string::npos);
  EXPECT_NE(report.find("Replacement: After Islam, became Shibam city populated.\n"), std::string::npos);
  EXPECT_NE(report.find("Reordering: After Islam, Shibam became a populated city.\n"), std::string::npos);
  EXPECT_NE(report.find("Morphological Analyzer: و:3, بعد:12,"), std::string::npos);
}

TEST(TraceReport, KeyValueLines) {
  const auto kv = format_kv(translate(kEnglishGolden, testsupport::resources()));
  EXPECT_NE(kv.find("language=en\n"), std::string::npos);
  EXPECT_NE(kv.find("context=Cinema\n"), std::string::npos);
  EXPECT_NE(kv.find("sentence.0.parse_source=store\n"), std::string::npos);
  EXPECT_EQ(kv.find("fatal="), std::string::npos);
}

TEST(TraceReport, FatalOnly) {
  const auto report = format_report(translate("", testsupport::resources()));
  EXPECT_EQ(report, "Error: [Language Identification] EmptyInput: no text\n");
}
