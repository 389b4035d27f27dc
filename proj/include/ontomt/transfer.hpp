#pragma once

// Item-level stages between parsing and reordering: compound detection, the
// single/multi meaning split, dictionary translation, ontology
// disambiguation, function-word adjustments and source-order replacement.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/language.hpp"
#include "ontomt/lexicon.hpp"
#include "ontomt/ontology.hpp"
#include "ontomt/parse_tree.hpp"
#include "ontomt/rules.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

enum class Origin { Dictionary, Ontology, Untranslated, Dropped, Inserted };

inline constexpr std::string_view origin_name(Origin o) {
  switch (o) {
    case Origin::Dictionary: return "Dictionary";
    case Origin::Ontology: return "Ontology";
    case Origin::Untranslated: return "Untranslated";
    case Origin::Dropped: return "Dropped";
    case Origin::Inserted: return "Inserted";
  }
  return "?";
}

// One target-side unit. Covers tokens [source_index, source_index + span);
// span > 1 only for ontology compounds, span 0 for inserted words.
struct TargetItem {
  std::size_t source_index = 0;
  std::size_t span = 1;
  std::string source_surface;
  std::string target_text;
  Origin origin = Origin::Dictionary;
  std::string source_pos;

  bool operator==(const TargetItem&) const = default;
};

struct StageError {
  std::string stage;
  ErrorKind kind;
  std::string message;
};

struct CompoundMatch {
  std::size_t first = 0;
  std::size_t length = 0;
  const OntologyConcept* entry = nullptr;
};

// single/multi/unknown partition every token not covered by a compound.
struct MeaningSplit {
  std::vector<Token> single;
  std::vector<Token> multi;
  std::vector<Token> unknown;
  std::vector<CompoundMatch> compounds;
};

inline constexpr std::size_t kMaxCompoundWords = 4;

// Greedy left-to-right longest match of multi-word source labels. The
// concept's POS must equal the tag of the window's last token.
inline std::vector<CompoundMatch> find_compounds(std::span<const Token> toks,
                                                 const ContextOntology& ontology,
                                                 Language source) {
  const auto labels = ontology.compound_labels(source);
  std::vector<CompoundMatch> found;
  std::size_t i = 0;
  while (i < toks.size()) {
    const CompoundLabel* hit = nullptr;
    for (const auto& label : labels) {
      const auto n = label.words.size();
      if (n > kMaxCompoundWords || i + n > toks.size()) continue;
      if (toks[i + n - 1].pos != label.entry->pos) continue;
      bool match = true;
      for (std::size_t k = 0; k < n && match; ++k) match = toks[i + k].normalized == label.words[k];
      if (match) {
        hit = &label;
        break;
      }
    }
    if (hit != nullptr) {
      found.push_back({i, hit->words.size(), hit->entry});
      i += hit->words.size();
    } else {
      ++i;
    }
  }
  return found;
}

inline MeaningSplit split_by_meaning(std::span<const Token> toks, const Lexicon& lexicon,
                                     std::vector<CompoundMatch> compounds = {}) {
  MeaningSplit split;
  std::vector<bool> covered(toks.size(), false);
  for (const auto& c : compounds) {
    for (std::size_t k = c.first; k < c.first + c.length && k < toks.size(); ++k) covered[k] = true;
  }
  split.compounds = std::move(compounds);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (covered[i]) continue;
    const auto& tok = toks[i];
    if (!lexicon.contains(tok.normalized)) {
      split.unknown.push_back(tok);
    } else if (lexicon.sense_count(tok.normalized) == 1) {
      split.single.push_back(tok);
    } else {
      split.multi.push_back(tok);
    }
  }
  return split;
}

inline std::string untranslated_marker(std::string_view surface, const TransferRules& rules) {
  return rules.untranslated_open + std::string(surface) + rules.untranslated_close;
}

inline std::vector<TargetItem> translate_single(std::span<const Token> single,
                                                const Lexicon& lexicon) {
  std::vector<TargetItem> items;
  items.reserve(single.size());
  for (const auto& tok : single) {
    if (!lexicon.contains(tok.normalized) || lexicon.sense_count(tok.normalized) != 1) {
      throw Error(ErrorKind::InternalSplitError,
                  "'" + tok.surface + "' reached the dictionary without a single meaning");
    }
    items.push_back({tok.index, 1, tok.surface, lexicon.single_meaning_lookup(tok.normalized, tok.pos),
                     Origin::Dictionary, tok.pos});
  }
  return items;
}

// Ontology resolution for multi-meaning tokens. Indefinite articles are
// dropped when translating out of English (Arabic has none); tokens missing
// from the ontology become untranslated markers and are reported in
// `errors`.
inline std::vector<TargetItem> disambiguate_multi(std::span<const Token> multi, Language source,
                                                  const ContextOntology& ontology,
                                                  std::vector<StageError>* errors = nullptr,
                                                  const TransferRules& rules = {}) {
  std::vector<TargetItem> items;
  items.reserve(multi.size());
  for (const auto& tok : multi) {
    if (source == Language::English && rules.is_indefinite_article(tok.pos, tok.surface)) {
      items.push_back({tok.index, 1, tok.surface, "", Origin::Dropped, tok.pos});
      continue;
    }
    if (const auto* c = ontology.find(tok.normalized, tok.pos, source)) {
      items.push_back({tok.index, 1, tok.surface, c->label(opposite(source)), Origin::Ontology, tok.pos});
      continue;
    }
    items.push_back({tok.index, 1, tok.surface, untranslated_marker(tok.surface, rules),
                     Origin::Untranslated, tok.pos});
    if (errors != nullptr) {
      errors->push_back({"Semantic Analyser", ErrorKind::NotInOntology,
                         tok.surface + "/" + tok.pos + " not in context " + ontology.context()});
    }
  }
  return items;
}

inline std::vector<TargetItem> compound_items(std::span<const Token> toks,
                                              std::span<const CompoundMatch> compounds,
                                              Language source) {
  std::vector<TargetItem> items;
  for (const auto& c : compounds) {
    std::string surface;
    for (std::size_t k = c.first; k < c.first + c.length; ++k) {
      if (!surface.empty()) surface.push_back(' ');
      surface += toks[k].surface;
    }
    items.push_back({c.first, c.length, surface, c.entry->label(opposite(source)), Origin::Ontology,
                     c.entry->pos});
  }
  return items;
}

inline std::vector<TargetItem> untranslated_items(std::span<const Token> unknown,
                                                  std::vector<StageError>* errors = nullptr,
                                                  const TransferRules& rules = {}) {
  std::vector<TargetItem> items;
  for (const auto& tok : unknown) {
    items.push_back({tok.index, 1, tok.surface, untranslated_marker(tok.surface, rules),
                     Origin::Untranslated, tok.pos});
    if (errors != nullptr) {
      errors->push_back({"Morphological Analyzer", ErrorKind::WordUnknown, tok.surface});
    }
  }
  return items;
}

inline void sort_by_source(std::vector<TargetItem>& items) {
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.source_index < b.source_index;
  });
}

namespace detail {

inline const ParseTree* first_leaf(const ParseTree& t) {
  if (t.is_leaf()) return &t;
  for (const auto& c : t.children) {
    if (const auto* l = first_leaf(c)) return l;
  }
  return nullptr;
}

inline const ParseTree* find_clause(const ParseTree& t, const TransferRules& rules) {
  if (t.is_leaf()) return nullptr;
  if (rules.clause_labels.contains(t.label)) return &t;
  for (const auto& c : t.children) {
    if (const auto* s = find_clause(c, rules)) return s;
  }
  return nullptr;
}

// Leaf index of `node`'s first leaf within `root`.
inline std::optional<std::size_t> leaf_offset(const ParseTree& root, const ParseTree& node) {
  std::size_t count = 0;
  auto walk = [&](auto&& self, const ParseTree& t) -> bool {
    if (&t == &node) return true;
    if (t.is_leaf()) {
      ++count;
      return false;
    }
    for (const auto& c : t.children) {
      if (self(self, c)) return true;
    }
    return false;
  };
  if (walk(walk, root)) return count;
  return std::nullopt;
}

inline TargetItem* item_at(std::vector<TargetItem>& items, std::size_t index) {
  for (auto& it : items) {
    if (it.source_index == index && it.span > 0) return &it;
  }
  return nullptr;
}

}  // namespace detail

// Context-dependent function-word handling that must happen before
// replacement (target English only):
//  - a sentence-initial conjunction directly followed by an adverbial is
//    absorbed into it ("و بعد" -> "After");
//  - a fronted adverbial phrase that opens the first clause and precedes its
//    VP is closed with a comma.
inline void adjust_function_words(std::vector<TargetItem>& items, const ParseTree& tree,
                                  Language source, const TransferRules& rules = {}) {
  if (opposite(source) != Language::English) return;
  const auto toks = tokens(tree);

  if (toks.size() >= 2 && rules.conjunction_tags.contains(toks[0].pos) &&
      rules.adverbial_tags.contains(toks[1].pos)) {
    if (auto* it = detail::item_at(items, 0); it != nullptr && it->span == 1) {
      it->origin = Origin::Dropped;
      it->target_text.clear();
    }
  }

  const auto* clause = detail::find_clause(tree, rules);
  if (clause == nullptr || clause->children.size() < 2) return;
  const auto& fronted = clause->children.front();
  if (fronted.is_leaf()) return;
  const auto* lead = detail::first_leaf(fronted);
  if (lead == nullptr || !rules.adverbial_tags.contains(lead->label)) return;
  const bool vp_follows = std::any_of(
      clause->children.begin() + 1, clause->children.end(),
      [&](const ParseTree& c) { return rules.verb_phrase_labels.contains(c.label); });
  if (!vp_follows) return;

  const auto start = detail::leaf_offset(tree, fronted);
  if (!start) return;
  const std::size_t end = *start + fronted.leaf_count();
  TargetItem* last = nullptr;
  for (auto& it : items) {
    if (it.source_index >= *start && it.source_index < end && !it.target_text.empty()) last = &it;
  }
  if (last != nullptr && !text::is_detachable_punctuation(text::decode_utf8(last->target_text).back())) {
    last->target_text += ",";
  }
}

// Joins non-empty texts with single spaces; punctuation-only texts attach to
// the preceding word; English output starts with a capital letter.
inline std::string render(std::span<const TargetItem* const> ordered, Language target) {
  std::string out;
  for (const auto* it : ordered) {
    if (it->target_text.empty()) continue;
    if (!out.empty() && !text::is_punctuation_token(it->target_text)) out.push_back(' ');
    out += it->target_text;
  }
  if (target == Language::English) out = text::capitalize_first(std::move(out));
  return out;
}

// Source-order substitution; the result keeps the source structure.
inline std::string replace(std::span<const Token> toks, std::span<const TargetItem> items,
                           Language target) {
  std::vector<int> cover(toks.size(), 0);
  for (const auto& it : items) {
    for (std::size_t k = it.source_index; k < it.source_index + it.span; ++k) {
      if (k >= toks.size()) {
        throw Error(ErrorKind::CoverageGap, "item covers index " + std::to_string(k) +
                                                " beyond " + std::to_string(toks.size()) + " tokens");
      }
      ++cover[k];
    }
  }
  for (std::size_t k = 0; k < cover.size(); ++k) {
    if (cover[k] != 1) {
      throw Error(ErrorKind::CoverageGap, "token " + std::to_string(k) + " covered " +
                                              std::to_string(cover[k]) + " times");
    }
  }
  std::vector<const TargetItem*> ordered;
  for (const auto& it : items) ordered.push_back(&it);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->source_index < b->source_index;
  });
  return render(ordered, target);
}

}  // namespace ontomt
