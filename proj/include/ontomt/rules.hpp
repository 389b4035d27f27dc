#pragma once

// Tag and word classes used by the transfer and reordering rules. Every rule
// reads its tag names from here, so a different tagset only needs a
// different TransferRules value.

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ontomt/text.hpp"

namespace ontomt {

struct TransferRules {
  std::set<std::string, std::less<>> noun_tags{"NN",   "NNS",   "NNP",   "NNPS",
                                               "DTNN", "DTNNS", "DTNNP", "DTNNPS"};
  std::set<std::string, std::less<>> singular_common_noun_tags{"NN"};
  std::set<std::string, std::less<>> adjective_tags{"JJ",   "JJR",   "JJS",
                                                    "DTJJ", "DTJJR", "DTJJS"};
  std::set<std::string, std::less<>> adverbial_tags{"RB", "IN"};
  std::set<std::string, std::less<>> conjunction_tags{"CC"};
  std::set<std::string, std::less<>> determiner_tags{"DT"};
  std::set<std::string, std::less<>> punctuation_tags{".", ",", ":", "PUNC", "EOL"};

  std::set<std::string, std::less<>> noun_phrase_labels{"NP"};
  std::set<std::string, std::less<>> verb_phrase_labels{"VP"};
  std::set<std::string, std::less<>> clause_labels{"S", "SINV", "SQ"};

  std::set<std::string, std::less<>> indefinite_articles{"a", "an"};
  // Auxiliaries are function words: R4 rewrites them.
  std::set<std::string, std::less<>> auxiliary_words{"am",  "is",   "are",   "was", "were",
                                                     "be",  "been", "being", "has", "have",
                                                     "had"};
  std::set<std::string, std::less<>> copular_verbs{"became", "become", "becomes", "is",
                                                   "are",    "was",    "were",    "remained",
                                                   "seems",  "seemed"};

  std::string verbal_noun_pos = "VN";
  std::string arabic_passive_marker = "يتم";
  std::string arabic_definite_marker = "ال";
  std::string untranslated_open = "[[";
  std::string untranslated_close = "]]";

  std::map<std::string, std::string, std::less<>> to_arabic_punctuation{
      {",", "،"}, {"?", "؟"}, {";", "؛"}};
  std::map<std::string, std::string, std::less<>> to_english_punctuation{
      {"،", ","}, {"؟", "?"}, {"؛", ";"}, {"۔", "."}};

  std::size_t max_passes = 10;

  static bool is_verb_tag(std::string_view tag) { return tag.substr(0, 2) == "VB"; }

  bool is_indefinite_article(std::string_view pos, std::string_view surface) const {
    return determiner_tags.contains(pos) &&
           indefinite_articles.contains(text::normalize_word(surface));
  }

  bool is_auxiliary(std::string_view pos, std::string_view surface) const {
    return is_verb_tag(pos) && auxiliary_words.contains(text::normalize_word(surface));
  }
};

}  // namespace ontomt
