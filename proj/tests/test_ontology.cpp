#include <gtest/gtest.h>

#include "ontomt/ontology.hpp"

using namespace ontomt;

namespace {

ContextOntology cinema() {
  return parse_ontology(
      "context:Cinema\n"
      "c1\tNN\tscreen\tشاشة\n"
      "c2\tNN\ttheater\tمسرح\n"
      "c3\tVBN\tprojected\tعرض\n"
      "c4\tVN\tshowing\tعرض\n"
      "c5\tWRB\twhere\tالتي فيها\n");
}

}  // namespace

TEST(Ontology, ResolvesBothDirections) {
  const auto o = cinema();
  EXPECT_EQ(o.resolve_homograph("theater", "NN", Language::English), "مسرح");
  EXPECT_EQ(o.resolve_homograph("Screen", "NN", Language::English), "شاشة");
  EXPECT_EQ(o.resolve_homograph("مسرح", "NN", Language::Arabic), "theater");
  EXPECT_EQ(o.resolve_homograph("عرض", "VN", Language::Arabic), "showing");
}

TEST(Ontology, PosFallbackOnlyWhenUnique) {
  const auto o = cinema();
  // "theater" has one concept: any tag finds it.
  EXPECT_EQ(o.resolve_homograph("theater", "NNP", Language::English), "مسرح");
  // Arabic عرض has two concepts: a foreign tag must not guess.
  try {
    (void)o.resolve_homograph("عرض", "NN", Language::Arabic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInOntology);
  }
}

TEST(Ontology, MissingWord) {
  const auto o = cinema();
  EXPECT_EQ(o.find("banana", "NN", Language::English), nullptr);
  EXPECT_THROW((void)o.resolve_homograph("banana", "NN", Language::English), Error);
}

TEST(Ontology, AmbiguousConceptRejected) {
  try {
    (void)parse_ontology("context:X\na\tNN\tbank\tضفة\nb\tNN\tbank\tمصرف\n", "x.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbiguousConcept);
    EXPECT_EQ(e.line(), 3u);
  }
  // Same label under another POS is allowed.
  EXPECT_NO_THROW((void)parse_ontology("context:X\na\tNN\tbank\tضفة\nb\tVB\tbank\tيودع\n"));
}

TEST(Ontology, ConceptNeedsBothLabels) {
  ContextOntology o("X");
  EXPECT_THROW(o.add({"a", "X", "NN", "word", ""}), Error);
  EXPECT_THROW(o.add({"a", "Y", "NN", "word", "كلمة"}), Error);
  o.add({"a", "X", "NN", "word", "كلمة"});
  EXPECT_THROW(o.add({"a", "X", "VB", "speak", "تكلم"}), Error);
}

TEST(Ontology, FileFormat) {
  auto kind_of = [](const std::string& content) {
    try {
      (void)parse_ontology(content);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  EXPECT_EQ(kind_of("a\tNN\tx\tس\n"), ErrorKind::FormatError);
  EXPECT_EQ(kind_of("context:\n"), ErrorKind::FormatError);
  EXPECT_EQ(kind_of("context:X\na\tNN\tx\n"), ErrorKind::FormatError);
  EXPECT_EQ(kind_of(""), ErrorKind::FormatError);
}

TEST(Ontology, CompoundLabelsLongestFirst) {
  const auto o = parse_ontology(
      "context:X\na\tNN\tcapital\tرأس المال\nb\tNN\tstock market crash\tانهيار\nc\tNN\tstock "
      "market\tبورصة\n");
  const auto en = o.compound_labels(Language::English);
  ASSERT_EQ(en.size(), 2u);
  EXPECT_EQ(en[0].words.size(), 3u);
  const auto ar = o.compound_labels(Language::Arabic);
  ASSERT_EQ(ar.size(), 1u);
  EXPECT_EQ(ar[0].entry->english_label, "capital");
}

TEST(Registry, LookupAndDuplicates) {
  OntologyRegistry r;
  r.add(cinema());
  EXPECT_EQ(registry_lookup("cinema", r).context(), "Cinema");
  EXPECT_THROW(r.add(ContextOntology("CINEMA")), Error);
  try {
    (void)r.lookup("Sports");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContextUnregistered);
  }
}

TEST(Registry, HomographAcrossContexts) {
  OntologyRegistry r;
  r.add(parse_ontology("context:Shibam\ns\tNN\tcapital\tعاصمة\n"));
  r.add(parse_ontology("context:Globalization\ng\tNN\tcapital\tرأس المال\n"));
  EXPECT_EQ(r.lookup("Shibam").resolve_homograph("capital", "NN", Language::English), "عاصمة");
  EXPECT_EQ(r.lookup("Globalization").resolve_homograph("capital", "NN", Language::English),
            "رأس المال");
}
