#pragma once

// Recorded-parse lookup with a flat rule-based fallback for unseen sentences.
//
// Parse-store file: one record per line,
//   sentence <TAB> bracketed_tree
// '#' comments allowed. Sentences are keyed by their normalized form.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/language.hpp"
#include "ontomt/lexicon.hpp"
#include "ontomt/parse_tree.hpp"
#include "ontomt/resource_io.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

// Case-folded, diacritic-stripped words with punctuation removed, joined by
// single spaces.
inline std::string sentence_key(std::string_view sentence) {
  std::string key;
  for (const auto& tok : text::tokenize(sentence)) {
    if (text::is_punctuation_token(tok)) continue;
    if (!key.empty()) key.push_back(' ');
    key += text::normalize_word(tok);
  }
  return key;
}

class ParseStore {
 public:
  explicit ParseStore(Language language) : language_(language) {}

  Language language() const noexcept { return language_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

  // Stores the tree in canonical form; rejects unreadable trees and
  // conflicting duplicates.
  void add(std::string_view sentence, std::string_view bracketed) {
    auto key = sentence_key(sentence);
    if (key.empty()) throw Error(ErrorKind::FormatError, "empty sentence");
    auto canonical = write_bracketed(read_bracketed(bracketed));
    auto [it, inserted] = entries_.emplace(std::move(key), canonical);
    if (!inserted && it->second != canonical) {
      throw Error(ErrorKind::DuplicateEntry, "sentence '" + it->first + "'");
    }
  }

  std::optional<ParseTree> lookup(std::string_view sentence) const {
    if (auto it = entries_.find(sentence_key(sentence)); it != entries_.end()) {
      return read_bracketed(it->second);
    }
    return std::nullopt;
  }

 private:
  Language language_;
  std::map<std::string, std::string> entries_;
};

inline ParseStore parse_parse_store(std::string_view content, Language language,
                                    const std::string& source = "<parses>",
                                    Warnings* warnings = nullptr) {
  ParseStore store(language);
  for (const auto& line : split_lines(content)) {
    if (is_blank_or_comment(line.text)) continue;
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2) {
      throw Error(ErrorKind::FormatError,
                  "expected 'sentence<TAB>tree', got " + std::to_string(fields.size()) + " columns",
                  source, line.number);
    }
    try {
      store.add(fields[0], fields[1]);
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), source, line.number);
    }
  }
  if (store.size() == 0) warn(warnings, source + ": parse store has no records");
  return store;
}

inline ParseStore load_parse_store(const std::filesystem::path& path, Language language,
                                   Warnings* warnings = nullptr) {
  return parse_parse_store(read_file(path), language, path.string(), warnings);
}

inline std::string_view punctuation_tag(Language language) {
  return language == Language::Arabic ? "PUNC" : ".";
}

// (ROOT (S leaves...)) with lexicon tags; unknown words are NN.
inline ParseTree fallback_parse(std::string_view sentence, Language language,
                                const Lexicon& lexicon) {
  const auto toks = text::tokenize(sentence);
  if (toks.empty()) throw Error(ErrorKind::TokenizationEmpty, "sentence has no tokens");
  std::vector<ParseTree> leaves;
  leaves.reserve(toks.size());
  for (const auto& tok : toks) {
    std::string tag;
    if (text::is_punctuation_token(tok)) {
      tag = punctuation_tag(language);
    } else {
      tag = lexicon.first_pos(tok).value_or("NN");
    }
    leaves.push_back(ParseTree::leaf(std::move(tag), tok));
  }
  return ParseTree::node("ROOT", {ParseTree::node("S", std::move(leaves))});
}

struct ParseOutcome {
  ParseTree tree;
  bool from_store = false;
};

inline ParseOutcome parse_sentence(std::string_view sentence, Language language,
                                   const ParseStore& store, const Lexicon& lexicon) {
  if (text::tokenize(sentence).empty()) {
    throw Error(ErrorKind::TokenizationEmpty, "sentence has no tokens");
  }
  if (auto recorded = store.lookup(sentence)) return {std::move(*recorded), true};
  return {fallback_parse(sentence, language, lexicon), false};
}

inline ParseTree parse(std::string_view sentence, Language language, const ParseStore& store,
                       const Lexicon& lexicon) {
  return parse_sentence(sentence, language, store, lexicon).tree;
}

}  // namespace ontomt
