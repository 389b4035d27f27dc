#pragma once

// Context-scoped bilingual ontologies. Each concept carries exactly one
// Arabic and one English label, and within one context a (label, pos) pair
// names at most one concept per language, so a homograph always resolves to
// a single in-context meaning.
//
// File format (UTF-8, '#' comments):
//   context:<name>
//   concept_id <TAB> pos <TAB> english_label <TAB> arabic_label

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/language.hpp"
#include "ontomt/resource_io.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

struct OntologyConcept {
  std::string id;
  std::string context;
  std::string pos;
  std::string english_label;
  std::string arabic_label;

  const std::string& label(Language lang) const {
    return lang == Language::Arabic ? arabic_label : english_label;
  }
};

// A source-language label spanning several words, for compound matching.
struct CompoundLabel {
  std::vector<std::string> words;  // normalized
  const OntologyConcept* entry = nullptr;
};

class ContextOntology {
 public:
  explicit ContextOntology(std::string context) : context_(std::move(context)) {
    if (text::trim(context_).empty()) {
      throw Error(ErrorKind::InvariantViolation, "empty context name");
    }
  }

  const std::string& context() const noexcept { return context_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  bool empty() const noexcept { return concepts_.empty(); }
  std::span<const OntologyConcept> concepts() const noexcept { return concepts_; }

  void add(OntologyConcept c) {
    if (c.id.empty()) throw Error(ErrorKind::InvariantViolation, "empty concept id");
    if (c.pos.empty()) throw Error(ErrorKind::InvariantViolation, "empty POS on " + c.id);
    if (text::trim(c.english_label).empty() || text::trim(c.arabic_label).empty()) {
      throw Error(ErrorKind::InvariantViolation,
                  "concept " + c.id + " needs one English and one Arabic label");
    }
    if (!text::iequals(c.context, context_)) {
      throw Error(ErrorKind::InvariantViolation,
                  "concept " + c.id + " belongs to '" + c.context + "', not '" + context_ + "'");
    }
    if (!ids_.insert(c.id).second) {
      throw Error(ErrorKind::DuplicateEntry, "concept id " + c.id);
    }
    for (Language lang : {Language::English, Language::Arabic}) {
      const auto key = std::make_pair(text::normalize_phrase(c.label(lang)), c.pos);
      if (index_[slot(lang)].contains(key)) {
        ids_.erase(c.id);
        throw Error(ErrorKind::AmbiguousConcept,
                    "(" + c.label(lang) + ", " + c.pos + ") in " +
                        std::string(language_name(lang)) + " is claimed by " +
                        concepts_[index_[slot(lang)].at(key)].id + " and " + c.id);
      }
    }
    const std::size_t position = concepts_.size();
    for (Language lang : {Language::English, Language::Arabic}) {
      const auto label = text::normalize_phrase(c.label(lang));
      index_[slot(lang)].emplace(std::make_pair(label, c.pos), position);
      by_label_[slot(lang)][label].push_back(position);
    }
    concepts_.push_back(std::move(c));
  }

  // The concept whose `source`-side label matches; falls back to the label's
  // only concept when the POS differs. Never returns a candidate set.
  const OntologyConcept* find(std::string_view word, std::string_view pos,
                              Language source) const {
    const auto label = text::normalize_phrase(word);
    const auto& idx = index_[slot(source)];
    if (auto it = idx.find(std::make_pair(label, std::string(pos))); it != idx.end()) {
      return &concepts_[it->second];
    }
    const auto& by_label = by_label_[slot(source)];
    if (auto it = by_label.find(label); it != by_label.end() && it->second.size() == 1) {
      return &concepts_[it->second.front()];
    }
    return nullptr;
  }

  // Exact (label, pos) membership with no POS fallback.
  bool has_label(std::string_view label, std::string_view pos, Language lang) const {
    return index_[slot(lang)].contains(
        std::make_pair(text::normalize_phrase(label), std::string(pos)));
  }

  std::string resolve_homograph(std::string_view word, std::string_view pos,
                                Language source) const {
    if (const auto* c = find(word, pos, source)) return c->label(opposite(source));
    throw Error(ErrorKind::NotInOntology,
                std::string(word) + "/" + std::string(pos) + " in context " + context_);
  }

  // Multi-word source-language labels, longest first.
  std::vector<CompoundLabel> compound_labels(Language source) const {
    std::vector<CompoundLabel> out;
    for (const auto& c : concepts_) {
      auto words = text::split_whitespace(text::normalize_phrase(c.label(source)));
      if (words.size() > 1) out.push_back({std::move(words), &c});
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.words.size() > b.words.size();
    });
    return out;
  }

  // Every normalized word occurring in a `lang` label.
  std::set<std::string> label_words(Language lang) const {
    std::set<std::string> out;
    for (const auto& c : concepts_) {
      for (auto& w : text::split_whitespace(text::normalize_phrase(c.label(lang)))) {
        out.insert(std::move(w));
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t slot(Language lang) { return lang == Language::Arabic ? 1 : 0; }

  std::string context_;
  std::vector<OntologyConcept> concepts_;
  std::set<std::string> ids_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_[2];
  std::map<std::string, std::vector<std::size_t>> by_label_[2];
};

class OntologyRegistry {
 public:
  void add(ContextOntology ontology) {
    if (find(ontology.context()) != nullptr) {
      throw Error(ErrorKind::DuplicateEntry, "context " + ontology.context());
    }
    ontologies_.push_back(std::move(ontology));
  }

  bool empty() const noexcept { return ontologies_.empty(); }
  std::size_t size() const noexcept { return ontologies_.size(); }
  auto begin() const { return ontologies_.begin(); }
  auto end() const { return ontologies_.end(); }

  const ContextOntology* find(std::string_view context) const {
    for (const auto& o : ontologies_) {
      if (text::iequals(o.context(), context)) return &o;
    }
    return nullptr;
  }

  // Exact, case-insensitive match on the context name.
  const ContextOntology& lookup(std::string_view context) const {
    if (const auto* o = find(context)) return *o;
    throw Error(ErrorKind::ContextUnregistered, std::string(context));
  }

 private:
  std::vector<ContextOntology> ontologies_;
};

inline const ContextOntology& registry_lookup(std::string_view context,
                                              const OntologyRegistry& registry) {
  return registry.lookup(context);
}

inline ContextOntology parse_ontology(std::string_view content,
                                      const std::string& source = "<ontology>",
                                      Warnings* warnings = nullptr) {
  std::optional<ContextOntology> ontology;
  for (const auto& line : split_lines(content)) {
    if (is_blank_or_comment(line.text)) continue;
    if (!ontology) {
      constexpr std::string_view kHeader = "context:";
      const auto header = text::trim(line.text);
      if (header.rfind(kHeader, 0) != 0) {
        throw Error(ErrorKind::FormatError, "expected 'context:<name>' header", source,
                    line.number);
      }
      const auto name = text::trim(std::string_view(header).substr(kHeader.size()));
      if (name.empty()) {
        throw Error(ErrorKind::FormatError, "empty context name", source, line.number);
      }
      ontology.emplace(name);
      continue;
    }
    const auto fields = split_tabs(line.text);
    if (fields.size() != 4) {
      throw Error(ErrorKind::FormatError,
                  "expected 4 tab-separated columns, got " + std::to_string(fields.size()),
                  source, line.number);
    }
    try {
      ontology->add({text::trim(fields[0]), ontology->context(), text::trim(fields[1]),
                     text::trim(fields[2]), text::trim(fields[3])});
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), source, line.number);
    }
  }
  if (!ontology) throw Error(ErrorKind::FormatError, "missing 'context:' header", source);
  if (ontology->empty()) warn(warnings, source + ": ontology " + ontology->context() + " has no concepts");
  return std::move(*ontology);
}

inline ContextOntology load_ontology(const std::filesystem::path& path,
                                     Warnings* warnings = nullptr) {
  return parse_ontology(read_file(path), path.string(), warnings);
}

}  // namespace ontomt
