#pragma once

// Source-language and context identification: the two routing decisions
// made before any parsing happens.

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/language.hpp"
#include "ontomt/ontology.hpp"
#include "ontomt/resource_io.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

// Arabic when more than half of the letter codepoints are in the Arabic
// blocks; digits, punctuation and marks do not vote.
inline Language identify_language(std::string_view input) {
  if (text::trim(input).empty()) throw Error(ErrorKind::EmptyInput, "no text");
  std::size_t arabic = 0;
  std::size_t letters = 0;
  for (char32_t c : text::decode_utf8(input)) {
    if (text::is_arabic_letter(c)) {
      ++arabic;
      ++letters;
    } else if (text::is_latin_letter(c)) {
      ++letters;
    }
  }
  if (letters == 0) throw Error(ErrorKind::NoLetters, "text contains no letters");
  return 2 * arabic > letters ? Language::Arabic : Language::English;
}

class StopWords {
 public:
  StopWords() = default;
  explicit StopWords(std::initializer_list<std::string_view> words) {
    for (auto w : words) add(w);
  }

  void add(std::string_view word) {
    auto w = text::normalize_word(text::trim(word));
    if (!w.empty()) words_.insert(std::move(w));
  }
  bool contains(std::string_view word) const {
    return words_.contains(text::normalize_word(word));
  }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

inline StopWords parse_stop_words(std::string_view content) {
  StopWords stop;
  for (const auto& line : split_lines(content)) {
    if (is_blank_or_comment(line.text)) continue;
    stop.add(line.text);
  }
  return stop;
}

inline StopWords load_stop_words(const std::filesystem::path& path) {
  return parse_stop_words(read_file(path));
}

struct ContextScore {
  std::string context;
  std::size_t overlap = 0;
};

// Distinct normalized non-stop-word types of the input, punctuation dropped.
inline std::set<std::string> content_types(std::string_view input, const StopWords& stop) {
  std::set<std::string> types;
  for (const auto& tok : text::tokenize(input)) {
    if (text::is_punctuation_token(tok) || stop.contains(tok)) continue;
    auto w = text::normalize_word(tok);
    if (!w.empty()) types.insert(std::move(w));
  }
  return types;
}

// Overlap of the input's content-word types with each ontology's
// source-language label words, in registry order.
inline std::vector<ContextScore> score_contexts(std::string_view input, Language language,
                                                const OntologyRegistry& registry,
                                                const StopWords& stop) {
  const auto types = content_types(input, stop);
  std::vector<ContextScore> scores;
  for (const auto& ontology : registry) {
    const auto labels = ontology.label_words(language);
    std::size_t overlap = 0;
    for (const auto& t : types) overlap += labels.contains(t) ? 1 : 0;
    scores.push_back({ontology.context(), overlap});
  }
  return scores;
}

// Returns the strict-maximum context; never guesses on ties or zero overlap.
inline std::string identify_context(std::string_view input, Language language,
                                    const OntologyRegistry& registry, const StopWords& stop) {
  if (registry.empty()) throw Error(ErrorKind::ContextUnknown, "no ontologies registered");
  const auto scores = score_contexts(input, language, registry, stop);
  const auto best = std::max_element(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
    return a.overlap < b.overlap;
  });
  if (best->overlap == 0) {
    throw Error(ErrorKind::ContextUnknown, "no ontology shares a content word with the input");
  }
  std::string tied;
  for (const auto& s : scores) {
    if (s.overlap == best->overlap && &s != &*best) tied += ", " + s.context;
  }
  if (!tied.empty()) {
    throw Error(ErrorKind::ContextTie, best->context + tied + " share overlap " +
                                           std::to_string(best->overlap) +
                                           "; pass the context explicitly");
  }
  return best->context;
}

// Validates an explicit context and returns its registered spelling.
inline std::string override_context(std::string_view requested, const OntologyRegistry& registry) {
  return registry.lookup(requested).context();
}

}  // namespace ontomt
