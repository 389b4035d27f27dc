#pragma once

// Random labeled trees for round-trip properties. Shared by the unit tests
// and the acceptance binary.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ontomt/parse_tree.hpp"

namespace treegen {

inline const std::array<const char*, 9> kPhraseLabels{"S", "NP", "VP", "PP", "SBAR", "ADJP", "WHADVP", "FRAG", "ROOT"};
inline const std::array<const char*, 12> kTags{"NN", "NNS", "DT", "JJ", "VBD", "VBN", "IN", "RB",
                                               "CC", "DTNN", "VBDS", "EOL"};
inline const std::array<const char*, 16> kWords{"the", "point", "screen", "theater", "a", ".", ",",
                                                "(", ")", "شبام", "مدينة", "الإسلام", "و", "x-y",
                                                "3.5", "؟"};

// Depth-bounded tree: internal nodes get 1..4 children, leaves take a tag
// and a word.
template <typename Rng>
ontomt::ParseTree random_node(Rng& rng, int depth) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<std::size_t> tag(0, kTags.size() - 1), word(0, kWords.size() - 1);
    return ontomt::ParseTree::leaf(kTags[tag(rng)], kWords[word(rng)]);
  }
  std::uniform_int_distribution<std::size_t> label(0, kPhraseLabels.size() - 1);
  std::uniform_int_distribution<int> arity(1, 4);
  std::vector<ontomt::ParseTree> kids;
  const int n = arity(rng);
  for (int i = 0; i < n; ++i) kids.push_back(random_node(rng, depth - 1));
  return ontomt::ParseTree::node(kPhraseLabels[label(rng)], std::move(kids));
}

template <typename Rng>
ontomt::ParseTree random_tree(Rng& rng) {
  std::uniform_int_distribution<int> depth(1, 6);
  auto t = random_node(rng, depth(rng));
  if (t.is_leaf()) return ontomt::ParseTree::node("ROOT", {std::move(t)});
  return t;
}

}  // namespace treegen
