#pragma once

// Target-side restructuring of the source-ordered replacement. Items hang
// off a copy of the parse tree; rules move subtrees, rewrite function words
// or insert articles, and run in passes until nothing changes.
//
// Into Arabic:
//   R1 drop indefinite articles (DT a/an)
//   R2 inside an NP, move adjectives after the noun they precede
//   R3 merge the standalone definite marker into the next word
//   R4 "were + VBN" -> passive marker + verbal noun, subject after it
//   R5 punctuation to Arabic forms
// Into English:
//   E1 "a"/"an" before an indefinite singular NP following a copular verb
//   E2 inside an NP, move post-nominal adjectives before the noun
//   E3 drop a sentence-initial conjunction that precedes an adverbial
//   E4 verb-subject -> subject-verb when the VP opens with its verb
//   E5 punctuation to English forms

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/language.hpp"
#include "ontomt/ontology.hpp"
#include "ontomt/parse_tree.hpp"
#include "ontomt/rules.hpp"
#include "ontomt/text.hpp"
#include "ontomt/transfer.hpp"

namespace ontomt {

struct ReorderOutcome {
  std::string text;
  std::vector<TargetItem> items;  // final order, dropped items included
  std::size_t passes = 0;         // including the final no-change pass
};

namespace detail {

struct WorkNode {
  std::string label;
  std::vector<WorkNode> children;
  bool leaf = false;
  std::optional<std::size_t> item;  // index into the item pool
};

class Reorderer {
 public:
  Reorderer(std::span<const TargetItem> items, const ParseTree& tree, Language target,
            const TransferRules& rules, const ContextOntology* ontology)
      : items_(items.begin(), items.end()), target_(target), rules_(rules), ontology_(ontology) {
    const auto leaves = tree.leaf_count();
    by_leaf_.assign(leaves, std::nullopt);
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const auto idx = items_[i].source_index;
      if (idx >= leaves) {
        throw Error(ErrorKind::CoverageGap, "item for index " + std::to_string(idx) +
                                                " has no leaf in a " + std::to_string(leaves) +
                                                "-leaf tree");
      }
      if (items_[i].span > 0) by_leaf_[idx] = i;
    }
    std::size_t counter = 0;
    root_ = build(tree, counter);
  }

  ReorderOutcome run() {
    for (std::size_t pass = 1; pass <= rules_.max_passes; ++pass) {
      if (!apply_all()) return finish(pass);
    }
    throw Error(ErrorKind::RuleLoopDetected,
                "no fixpoint after " + std::to_string(rules_.max_passes) + " passes");
  }

 private:
  WorkNode build(const ParseTree& t, std::size_t& counter) {
    WorkNode n{t.label, {}, t.is_leaf(), std::nullopt};
    if (t.is_leaf()) {
      n.item = by_leaf_[counter++];
      return n;
    }
    for (const auto& c : t.children) n.children.push_back(build(c, counter));
    return n;
  }

  TargetItem* item(const WorkNode& n) { return n.leaf && n.item ? &items_[*n.item] : nullptr; }

  bool is_leaf_tagged(const WorkNode& n, const auto& tags) const {
    return n.leaf && tags.contains(n.label);
  }

  void leaves(WorkNode& n, std::vector<WorkNode*>& out) {
    if (n.leaf) {
      out.push_back(&n);
      return;
    }
    for (auto& c : n.children) leaves(c, out);
  }

  std::vector<WorkNode*> leaves() {
    std::vector<WorkNode*> out;
    leaves(root_, out);
    return out;
  }

  template <typename Fn>
  bool each_node(WorkNode& n, Fn&& fn) {
    bool changed = fn(n);
    for (auto& c : n.children) changed = each_node(c, fn) || changed;
    return changed;
  }

  static void drop(TargetItem& it) {
    it.origin = Origin::Dropped;
    it.target_text.clear();
  }

  bool apply_all() {
    bool changed = false;
    if (target_ == Language::Arabic) {
      changed = drop_indefinite_articles() || changed;
      changed = adjectives_after_nouns() || changed;
      changed = merge_definite_marker() || changed;
      changed = passive_to_verbal_noun() || changed;
      changed = map_punctuation(rules_.to_arabic_punctuation) || changed;
    } else {
      changed = insert_indefinite_articles() || changed;
      changed = adjectives_before_nouns() || changed;
      changed = drop_leading_conjunction() || changed;
      changed = subject_before_verb() || changed;
      changed = map_punctuation(rules_.to_english_punctuation) || changed;
    }
    return changed;
  }

  // R1
  bool drop_indefinite_articles() {
    bool changed = false;
    for (auto* leaf : leaves()) {
      auto* it = item(*leaf);
      if (it == nullptr || it->origin == Origin::Dropped || it->origin == Origin::Inserted) continue;
      if (rules_.is_indefinite_article(it->source_pos, it->source_surface)) {
        drop(*it);
        changed = true;
      }
    }
    return changed;
  }

  // R2: [JJ+ N] -> [N JJ+] among an NP's children.
  bool adjectives_after_nouns() {
    return each_node(root_, [&](WorkNode& n) {
      if (n.leaf || !rules_.noun_phrase_labels.contains(n.label)) return false;
      auto& kids = n.children;
      for (std::size_t j = 1; j < kids.size(); ++j) {
        if (!is_leaf_tagged(kids[j], rules_.noun_tags)) continue;
        std::size_t i = j;
        while (i > 0 && is_leaf_tagged(kids[i - 1], rules_.adjective_tags)) --i;
        if (i == j) continue;
        std::rotate(kids.begin() + i, kids.begin() + j, kids.begin() + j + 1);
        return true;
      }
      return false;
    });
  }

  // R3: a standalone definite marker disappears before a word that already
  // carries it, and is prefixed to one that does not.
  bool merge_definite_marker() {
    bool changed = false;
    auto ls = leaves();
    const auto& marker = rules_.arabic_definite_marker;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      auto* it = item(*ls[k]);
      if (it == nullptr || it->target_text != marker) continue;
      TargetItem* next = nullptr;
      for (std::size_t m = k + 1; m < ls.size() && next == nullptr; ++m) {
        auto* cand = item(*ls[m]);
        if (cand != nullptr && !cand->target_text.empty()) next = cand;
      }
      if (next == nullptr || text::is_punctuation_token(next->target_text)) continue;
      if (next->target_text.rfind(marker, 0) != 0) next->target_text = marker + next->target_text;
      drop(*it);
      changed = true;
    }
    return changed;
  }

  bool is_verbal_noun(const TargetItem& it) const {
    return ontology_ != nullptr &&
           ontology_->has_label(it.target_text, rules_.verbal_noun_pos, Language::Arabic);
  }

  // R4: (S .. NP (VP aux (VP VBN ..)) ..) -> (S .. (VP marker (VP VN NP ..)) ..)
  bool passive_to_verbal_noun() {
    return each_node(root_, [&](WorkNode& s) {
      if (s.leaf || !rules_.clause_labels.contains(s.label)) return false;
      for (std::size_t k = 0; k + 1 < s.children.size(); ++k) {
        auto& np = s.children[k];
        auto& vp = s.children[k + 1];
        if (np.leaf || !rules_.noun_phrase_labels.contains(np.label)) continue;
        if (vp.leaf || !rules_.verb_phrase_labels.contains(vp.label) || vp.children.size() < 2) {
          continue;
        }
        auto* aux = item(vp.children[0]);
        auto& inner = vp.children[1];
        if (aux == nullptr || !rules_.is_auxiliary(aux->source_pos, aux->source_surface)) continue;
        if (inner.leaf || !rules_.verb_phrase_labels.contains(inner.label) || inner.children.empty()) {
          continue;
        }
        auto* participle = item(inner.children[0]);
        if (participle == nullptr || participle->source_pos != "VBN" || !is_verbal_noun(*participle)) {
          continue;
        }
        aux->target_text = rules_.arabic_passive_marker;
        WorkNode subject = std::move(np);
        s.children.erase(s.children.begin() + static_cast<std::ptrdiff_t>(k));
        auto& moved_inner = s.children[k].children[1];
        moved_inner.children.insert(moved_inner.children.begin() + 1, std::move(subject));
        return true;
      }
      return false;
    });
  }

  bool map_punctuation(const std::map<std::string, std::string, std::less<>>& table) {
    bool changed = false;
    for (auto* leaf : leaves()) {
      auto* it = item(*leaf);
      if (it == nullptr) continue;
      if (auto m = table.find(it->target_text); m != table.end()) {
        it->target_text = m->second;
        changed = true;
      }
    }
    return changed;
  }

  std::string first_word(WorkNode& n) {
    std::vector<WorkNode*> ls;
    leaves(n, ls);
    for (auto* l : ls) {
      if (auto* it = item(*l); it != nullptr && !it->target_text.empty()) return it->target_text;
    }
    return {};
  }

  // E1
  bool insert_indefinite_articles() {
    return each_node(root_, [&](WorkNode& parent) {
      if (parent.leaf) return false;
      bool changed = false;
      for (std::size_t i = 0; i + 1 < parent.children.size(); ++i) {
        auto* verb = item(parent.children[i]);
        if (verb == nullptr || !TransferRules::is_verb_tag(verb->source_pos)) continue;
        if (!rules_.copular_verbs.contains(text::normalize_word(verb->target_text))) continue;
        WorkNode* outer = &parent.children[i + 1];
        if (outer->leaf || !rules_.noun_phrase_labels.contains(outer->label)) continue;
        // (NP (NP ...)) wrappers: the article goes on the innermost phrase.
        while (outer->children.size() == 1 && !outer->children[0].leaf &&
               rules_.noun_phrase_labels.contains(outer->children[0].label)) {
          outer = &outer->children[0];
        }
        auto& np = *outer;
        if (np.children.empty()) continue;

        auto* existing = item(np.children.front());
        if (existing != nullptr && existing->origin == Origin::Inserted) {
          // Keep a/an in agreement with whatever now follows it.
          std::string rest;
          for (std::size_t c = 1; c < np.children.size() && rest.empty(); ++c) {
            rest = first_word(np.children[c]);
          }
          const auto want = article_for(rest);
          if (existing->target_text != want) {
            existing->target_text = want;
            changed = true;
          }
          continue;
        }
        const WorkNode* head = nullptr;
        bool determined = false;
        for (const auto& c : np.children) {
          if (is_leaf_tagged(c, rules_.noun_tags)) head = &c;
          if (c.leaf && (rules_.determiner_tags.contains(c.label) || c.label.rfind("DT", 0) == 0)) {
            determined = true;
          }
        }
        if (head == nullptr || !rules_.singular_common_noun_tags.contains(head->label) || determined) {
          continue;
        }
        const auto lead = first_word(np);
        if (lead.empty() || text::normalize_word(lead).rfind("the ", 0) == 0 ||
            text::normalize_word(lead) == "the") {
          continue;
        }
        TargetItem article{np_index(np), 0, "", article_for(lead), Origin::Inserted, "DT"};
        items_.push_back(std::move(article));
        np.children.insert(np.children.begin(),
                           WorkNode{"DT", {}, true, items_.size() - 1});
        changed = true;
      }
      return changed;
    });
  }

  static std::string article_for(const std::string& next) {
    return text::starts_with_vowel_letter(next) ? "an" : "a";
  }

  std::size_t np_index(WorkNode& np) {
    std::vector<WorkNode*> ls;
    leaves(np, ls);
    for (auto* l : ls) {
      if (auto* it = item(*l)) return it->source_index;
    }
    return 0;
  }

  // E2: [N JJ+] -> [JJ+ N] among an NP's children.
  bool adjectives_before_nouns() {
    return each_node(root_, [&](WorkNode& n) {
      if (n.leaf || !rules_.noun_phrase_labels.contains(n.label)) return false;
      auto& kids = n.children;
      for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
        if (!is_leaf_tagged(kids[i], rules_.noun_tags)) continue;
        std::size_t j = i + 1;
        while (j < kids.size() && is_leaf_tagged(kids[j], rules_.adjective_tags)) ++j;
        if (j == i + 1) continue;
        std::rotate(kids.begin() + i, kids.begin() + i + 1, kids.begin() + j);
        return true;
      }
      return false;
    });
  }

  // E3
  bool drop_leading_conjunction() {
    auto ls = leaves();
    std::vector<TargetItem*> live;
    std::vector<WorkNode*> live_nodes;
    for (auto* l : ls) {
      if (auto* it = item(*l); it != nullptr && !it->target_text.empty()) {
        live.push_back(it);
        live_nodes.push_back(l);
      }
    }
    if (live.size() < 2) return false;
    if (!rules_.conjunction_tags.contains(live[0]->source_pos)) return false;
    if (!rules_.adverbial_tags.contains(live[1]->source_pos)) return false;
    drop(*live[0]);
    return true;
  }

  bool opens_with_adverbial(WorkNode& n) {
    std::vector<WorkNode*> ls;
    leaves(n, ls);
    return !ls.empty() && rules_.adverbial_tags.contains(ls.front()->label);
  }

  // E4: (VP V (NP subj rest..)) -> (VP subj V (NP rest..)); a one-child NP
  // moves whole. Skipped when the clause already has a subject NP before the
  // VP (fronted adverbial phrases do not count).
  bool subject_before_verb() {
    return each_node(root_, [&](WorkNode& clause) {
      if (clause.leaf) return false;
      for (std::size_t k = 0; k < clause.children.size(); ++k) {
        auto& vp = clause.children[k];
        if (vp.leaf || !rules_.verb_phrase_labels.contains(vp.label) || vp.children.size() < 2) {
          continue;
        }
        bool has_subject = false;
        for (std::size_t p = 0; p < k; ++p) {
          auto& sib = clause.children[p];
          if (!sib.leaf && rules_.noun_phrase_labels.contains(sib.label) && !opens_with_adverbial(sib)) {
            has_subject = true;
          }
        }
        if (has_subject) continue;
        if (!vp.children[0].leaf || !TransferRules::is_verb_tag(vp.children[0].label)) continue;
        auto& np = vp.children[1];
        if (np.leaf || !rules_.noun_phrase_labels.contains(np.label) || np.children.empty()) continue;
        if (!is_leaf_tagged(np.children[0], rules_.noun_tags) && np.children.size() > 1) continue;
        if (np.children.size() == 1) {
          std::swap(vp.children[0], vp.children[1]);
        } else {
          WorkNode subject = std::move(np.children.front());
          np.children.erase(np.children.begin());
          vp.children.insert(vp.children.begin(), std::move(subject));
        }
        return true;
      }
      return false;
    });
  }

  ReorderOutcome finish(std::size_t passes) {
    ReorderOutcome out;
    out.passes = passes;
    std::vector<const TargetItem*> ordered;
    for (auto* l : leaves()) {
      if (auto* it = item(*l)) ordered.push_back(it);
    }
    out.text = render(ordered, target_);
    for (const auto* it : ordered) out.items.push_back(*it);
    return out;
  }

  std::vector<TargetItem> items_;
  std::vector<std::optional<std::size_t>> by_leaf_;
  Language target_;
  const TransferRules& rules_;
  const ContextOntology* ontology_;
  WorkNode root_;
};

}  // namespace detail

// Items must be aligned to `tree`'s leaves by source_index. `ontology` is
// consulted only by R4 (verbal-noun check). Throws RuleLoopDetected when no
// fixpoint is reached within rules.max_passes passes.
inline ReorderOutcome reorder(std::span<const TargetItem> items, const ParseTree& tree,
                              Language target, const TransferRules& rules = {},
                              const ContextOntology* ontology = nullptr) {
  return detail::Reorderer(items, tree, target, rules, ontology).run();
}

// Words of content items (dictionary/ontology origin; not determiners,
// punctuation or auxiliaries), normalized, punctuation stripped, sorted.
// Arabic words lose an attached definite marker so R3 does not count as a
// content change.
inline std::vector<std::string> content_words(std::span<const TargetItem> items, Language target,
                                              const TransferRules& rules = {}) {
  std::vector<std::string> words;
  for (const auto& it : items) {
    if (it.origin != Origin::Dictionary && it.origin != Origin::Ontology) continue;
    if (rules.determiner_tags.contains(it.source_pos) ||
        rules.punctuation_tags.contains(it.source_pos) ||
        rules.is_auxiliary(it.source_pos, it.source_surface)) {
      continue;
    }
    for (const auto& tok : text::tokenize(it.target_text)) {
      if (text::is_punctuation_token(tok)) continue;
      auto w = text::normalize_word(tok);
      const auto& marker = rules.arabic_definite_marker;
      if (target == Language::Arabic && w.rfind(marker, 0) == 0 &&
          text::codepoint_count(w) > text::codepoint_count(marker) + 1) {
        w.erase(0, marker.size());
      }
      words.push_back(std::move(w));
    }
  }
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace ontomt
