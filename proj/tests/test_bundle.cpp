#include <gtest/gtest.h>

#include "ontomt/bundle.hpp"
#include "test_support.hpp"

using namespace ontomt;

namespace {

ErrorKind load_error(const std::filesystem::path& dir) {
  try {
    (void)load_bundle(dir);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

}  // namespace

TEST(Bundle, ShippedLoads) {
  const auto& b = testsupport::shipped();
  EXPECT_EQ(b.contexts, (std::vector<std::string>{"Shibam", "Cinema", "Globalization", "Calligraphy"}));
  EXPECT_EQ(b.resources.ontologies.size(), 4u);
  ASSERT_TRUE(b.corpus);
  EXPECT_EQ(b.corpus->size(), 10u);
  EXPECT_EQ(b.resources.english_lexicon.sense_count("point"), 31);
  EXPECT_EQ(b.resources.arabic_lexicon.sense_count("بعد"), 12);
}

TEST(Bundle, ShippedValidates) {
  const auto report = validate_bundle(ONTOMT_BUNDLE_DIR);
  for (const auto& e : report.errors) ADD_FAILURE() << e.what();
  EXPECT_TRUE(report.ok());
  EXPECT_GE(report.checked.size(), 10u);
  // theatre/theater share one tree.
  EXPECT_EQ(report.warnings.size(), 1u);
}

TEST(Bundle, MissingDirectory) {
  EXPECT_EQ(load_error("/nonexistent/ontomt"), ErrorKind::FileUnreadable);
  const auto report = validate_bundle("/nonexistent/ontomt");
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].kind(), ErrorKind::FileUnreadable);
}

TEST(Bundle, ManifestErrors) {
  EXPECT_EQ(parse_manifest("A\nB\n"), (std::vector<std::string>{"A", "B"}));
  EXPECT_THROW((void)parse_manifest("# nothing\n"), Error);
  try {
    (void)parse_manifest("A\na\n", "m.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateEntry);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Bundle, AmbiguousConceptReported) {
  testsupport::ScratchDir dir("bundle_ambiguous");
  dir.copy_bundle();
  dir.append("ontology.cinema.txt", "cin.dup\tNN\tscreen\tستار\n");
  EXPECT_EQ(load_error(dir.path()), ErrorKind::AmbiguousConcept);
  const auto report = validate_bundle(dir.path());
  // The corpus then also names an unloaded context.
  ASSERT_EQ(report.errors.size(), 2u);
  EXPECT_EQ(report.errors[0].kind(), ErrorKind::AmbiguousConcept);
  EXPECT_NE(report.errors[0].file().find("ontology.cinema.txt"), std::string::npos);
  EXPECT_EQ(report.errors[1].kind(), ErrorKind::ContextUnregistered);
}

TEST(Bundle, OntologyHeaderMustMatchManifest) {
  testsupport::ScratchDir dir("bundle_header");
  dir.copy_bundle();
  dir.write("ontology.shibam.txt", "context:Cinema\nx\tNN\tx\tس\n");
  EXPECT_EQ(load_error(dir.path()), ErrorKind::InvariantViolation);
}

TEST(Bundle, BrokenTreeAndUnknownCorpusContext) {
  testsupport::ScratchDir dir("bundle_broken");
  dir.copy_bundle();
  dir.append("parses.en.txt", "x y\t(S (NN x) (NN y)\n");
  dir.append("corpus.txt", "\nid: Extra\nlang: en\ncontext: Astronomy\nsource: x\nreference: س\n");
  EXPECT_EQ(load_error(dir.path()), ErrorKind::UnbalancedBrackets);
  const auto report = validate_bundle(dir.path());
  std::set<ErrorKind> kinds;
  for (const auto& e : report.errors) kinds.insert(e.kind());
  EXPECT_TRUE(kinds.contains(ErrorKind::UnbalancedBrackets));
  EXPECT_TRUE(kinds.contains(ErrorKind::ContextUnregistered));
}

TEST(Bundle, CorpusIsOptional) {
  testsupport::ScratchDir dir("bundle_nocorpus");
  dir.copy_bundle();
  std::filesystem::remove(dir.path() / "corpus.txt");
  const auto b = load_bundle(dir.path());
  EXPECT_FALSE(b.corpus);
}
