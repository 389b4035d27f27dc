#include <gtest/gtest.h>

#include <random>

#include "ontomt/parse_tree.hpp"
#include "tree_gen.hpp"

using namespace ontomt;

namespace {

ErrorKind read_error(std::string_view s) {
  try {
    (void)read_bracketed(s);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

}  // namespace

TEST(Bracketed, ReadsCinemaTree) {
  const auto t = read_bracketed(
      "(ROOT (S (NP (DT the) (NN point)) (SBAR (WHADVP (WRB where)) (S (NP (NNS images)) (VP (VBD "
      "were) (VP (VBN projected) (PP (IN on) (NP (NP (DT a) (NN screen)) (PP (IN in) (NP (DT a) (JJ "
      "darkened) (NN theater)))))))))))");
  const auto toks = tokens(t);
  ASSERT_EQ(toks.size(), 13u);
  EXPECT_EQ(toks[0].surface, "the");
  EXPECT_EQ(toks[0].pos, "DT");
  EXPECT_EQ(toks[12].surface, "theater");
  EXPECT_EQ(toks[12].index, 12u);
  EXPECT_EQ(t.leaf_count(), 13u);
}

TEST(Bracketed, ArabicLeaves) {
  const auto t = read_bracketed("(ROOT (CC و) (S (NP (DTNN الإسلام)) (EOL .)))");
  const auto toks = tokens(t);
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[0].pos, "CC");
  EXPECT_EQ(toks[1].normalized, "الاسلام");
  EXPECT_EQ(toks[2].pos, "EOL");
}

TEST(Bracketed, WritesCanonicalForm) {
  EXPECT_EQ(write_bracketed(read_bracketed("( S\n  (NN  x )(VB y))")), "(S (NN x) (VB y))");
  EXPECT_EQ(write_bracketed(read_bracketed("(NN x)")), "(NN x)");
}

TEST(Bracketed, ForestIsWrapped) {
  const auto t = read_bracketed("(CC و) (S (NN x))");
  EXPECT_EQ(t.label, "ROOT");
  EXPECT_EQ(t.children.size(), 2u);
}

TEST(Bracketed, EscapedParentheses) {
  const auto t = ParseTree::node("S", {ParseTree::leaf("-LRB-", "("), ParseTree::leaf("NN", "x"),
                                       ParseTree::leaf("-RRB-", ")")});
  const auto s = write_bracketed(t);
  EXPECT_EQ(s, "(S (-LRB- -LRB-) (NN x) (-RRB- -RRB-))");
  EXPECT_EQ(read_bracketed(s), t);
}

TEST(Bracketed, Errors) {
  EXPECT_EQ(read_error("(S (NN x)"), ErrorKind::UnbalancedBrackets);
  EXPECT_EQ(read_error("(S (NN x)))"), ErrorKind::UnbalancedBrackets);
  EXPECT_EQ(read_error("()"), ErrorKind::EmptyNode);
  EXPECT_EQ(read_error(""), ErrorKind::EmptyNode);
  EXPECT_EQ(read_error("(S (NN))"), ErrorKind::LeafWithoutTag);
  EXPECT_EQ(read_error("(S x (NN y))"), ErrorKind::LeafWithoutTag);
  EXPECT_EQ(read_error("word"), ErrorKind::LeafWithoutTag);
  EXPECT_EQ(read_error("(S (NN x y))"), ErrorKind::LeafWithoutTag);
}

TEST(Bracketed, ErrorsReportPosition) {
  try {
    (void)read_bracketed("(S (NN x)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find("position 0"), std::string::npos) << e.detail();
  }
}

TEST(Bracketed, RandomRoundTrip) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const auto tree = treegen::random_tree(rng);
    const auto text = write_bracketed(tree);
    const auto back = read_bracketed(text);
    ASSERT_EQ(back, tree) << text;
    ASSERT_EQ(write_bracketed(back), text);
    ASSERT_EQ(tokens(back), tokens(tree));
  }
}
