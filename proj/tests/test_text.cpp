#include <gtest/gtest.h>

#include "ontomt/text.hpp"

using namespace ontomt;

TEST(Utf8, DecodesMixedScripts) {
  const auto cps = text::decode_utf8("aب€𝄞");
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[0], U'a');
  EXPECT_EQ(cps[1], 0x0628u);
  EXPECT_EQ(cps[2], 0x20ACu);
  EXPECT_EQ(cps[3], 0x1D11Eu);
  EXPECT_EQ(text::encode_utf8(cps), "aب€𝄞");
}

TEST(Utf8, MalformedBytesBecomeReplacementChars) {
  const std::string bad = std::string("a") + char(0xC3) + "b" + char(0xE2) + char(0x82);
  const auto cps = text::decode_utf8(bad);
  ASSERT_GE(cps.size(), 3u);
  EXPECT_EQ(cps[0], U'a');
  EXPECT_EQ(cps[1], text::kReplacementChar);
  EXPECT_EQ(cps.back(), text::kReplacementChar);
}

TEST(Normalize, EnglishCaseFold) {
  EXPECT_EQ(text::normalize_word("Theatre"), "theatre");
  EXPECT_EQ(text::normalize_word("WORD"), "word");
}

TEST(Normalize, ArabicDiacriticsTatweelAndAlef) {
  EXPECT_EQ(text::normalize_word("مَدِينَة"), "مدينة");
  EXPECT_EQ(text::normalize_word("مـدينة"), "مدينة");
  EXPECT_EQ(text::normalize_word("أصبحت"), "اصبحت");
  EXPECT_EQ(text::normalize_word("الإسلام"), text::normalize_word("الاسلام"));
  EXPECT_EQ(text::normalize_word("آمن"), "امن");
}

TEST(Normalize, PhraseCollapsesWhitespace) {
  EXPECT_EQ(text::normalize_phrase("  The   Point \t Where "), "the point where");
}

TEST(Tokenize, DetachesTrailingPunctuation) {
  const std::vector<std::string> expected{"Word", "word", "."};
  EXPECT_EQ(text::tokenize("Word word."), expected);
  const std::vector<std::string> ar{"ماذا", "؟"};
  EXPECT_EQ(text::tokenize("ماذا؟"), ar);
  const std::vector<std::string> multi{"wait", "!", "?"};
  EXPECT_EQ(text::tokenize("wait!?"), multi);
}

TEST(Tokenize, KeepsInternalPunctuation) {
  const std::vector<std::string> expected{"e.g", ".", "U.S"};
  EXPECT_EQ(text::tokenize("e.g. U.S"), expected);
}

TEST(Tokenize, EmptyAndBlank) {
  EXPECT_TRUE(text::tokenize("").empty());
  EXPECT_TRUE(text::tokenize(" \t\n ").empty());
}

TEST(Sentences, SplitKeepsTerminators) {
  const std::vector<std::string> expected{"One.", "Two?", "ثلاثة؟", "four"};
  EXPECT_EQ(text::split_sentences("One. Two? ثلاثة؟ four"), expected);
  const std::vector<std::string> run{"Wait!?", "Go."};
  EXPECT_EQ(text::split_sentences("Wait!? Go."), run);
}

TEST(Punctuation, Tokens) {
  EXPECT_TRUE(text::is_punctuation_token("."));
  EXPECT_TRUE(text::is_punctuation_token("،"));
  EXPECT_TRUE(text::is_punctuation_token("?!"));
  EXPECT_FALSE(text::is_punctuation_token("a."));
  EXPECT_FALSE(text::is_punctuation_token(""));
}

TEST(Text, CapitalizeAndVowels) {
  EXPECT_EQ(text::capitalize_first("after"), "After");
  EXPECT_EQ(text::capitalize_first("النقطة"), "النقطة");
  EXPECT_TRUE(text::starts_with_vowel_letter("old"));
  EXPECT_FALSE(text::starts_with_vowel_letter("city"));
}

TEST(Text, TrimHandlesUnicodeSpace) {
  EXPECT_EQ(text::trim("  abc 　"), "abc");
}
