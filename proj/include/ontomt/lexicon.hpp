#pragma once

// Bilingual lexicon: sense counts (the morphological analyzer's answer to
// "one meaning or many?") and the single-meaning dictionary.
//
// File format, one entry per line, tab separated:
//   surface  language(ar|en)  pos  sense_count  single_translation
// The translation column is present iff sense_count == 1 (it may be omitted
// entirely when sense_count > 1). Lines starting with '#' are comments.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/language.hpp"
#include "ontomt/resource_io.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

struct LexiconEntry {
  std::string surface;
  Language language = Language::English;
  std::string pos;
  int sense_count = 1;
  std::optional<std::string> single_translation;

  bool operator==(const LexiconEntry&) const = default;
};

class Lexicon {
 public:
  explicit Lexicon(Language language) : language_(language) {}

  Language language() const noexcept { return language_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const LexiconEntry> entries() const noexcept { return entries_; }

  // Validates and inserts. Throws InvariantViolation or DuplicateEntry.
  void add(LexiconEntry entry) {
    if (entry.language != language_) {
      throw Error(ErrorKind::InvariantViolation,
                  "entry '" + entry.surface + "' is " +
                      std::string(language_code(entry.language)) + " in a " +
                      std::string(language_code(language_)) + " lexicon");
    }
    if (text::normalize_word(entry.surface).empty()) {
      throw Error(ErrorKind::InvariantViolation, "empty surface");
    }
    if (entry.pos.empty()) {
      throw Error(ErrorKind::InvariantViolation, "empty POS for '" + entry.surface + "'");
    }
    if (entry.sense_count < 1) {
      throw Error(ErrorKind::InvariantViolation,
                  "sense_count must be >= 1 for '" + entry.surface + "'");
    }
    if (entry.single_translation && entry.single_translation->empty()) {
      entry.single_translation.reset();
    }
    if ((entry.sense_count == 1) != entry.single_translation.has_value()) {
      throw Error(ErrorKind::InvariantViolation,
                  entry.sense_count == 1
                      ? "sense_count=1 without translation for '" + entry.surface + "'"
                      : "translation given for multi-sense '" + entry.surface + "'");
    }
    const auto key = text::normalize_word(entry.surface);
    auto& slots = index_[key];
    for (std::size_t i : slots) {
      if (entries_[i].pos == entry.pos) {
        throw Error(ErrorKind::DuplicateEntry,
                    "(" + entry.surface + ", " + std::string(language_code(language_)) +
                        ", " + entry.pos + ")");
      }
    }
    slots.push_back(entries_.size());
    entries_.push_back(std::move(entry));
  }

  bool contains(std::string_view word) const {
    return index_.contains(text::normalize_word(word));
  }

  // All POS variants of a word, in file order.
  std::vector<const LexiconEntry*> variants(std::string_view word) const {
    std::vector<const LexiconEntry*> out;
    if (auto it = index_.find(text::normalize_word(word)); it != index_.end()) {
      for (std::size_t i : it->second) out.push_back(&entries_[i]);
    }
    return out;
  }

  const LexiconEntry* find(std::string_view word, std::string_view pos) const {
    for (const auto* e : variants(word)) {
      if (e->pos == pos) return e;
    }
    return nullptr;
  }

  // Maximum sense count over the word's POS variants.
  int sense_count(std::string_view word) const {
    const auto vs = variants(word);
    if (vs.empty()) throw Error(ErrorKind::WordUnknown, std::string(word));
    int best = 0;
    for (const auto* e : vs) best = std::max(best, e->sense_count);
    return best;
  }

  // POS of the first variant listed for the word; the fallback tagger's choice.
  std::optional<std::string> first_pos(std::string_view word) const {
    const auto vs = variants(word);
    if (vs.empty()) return std::nullopt;
    return vs.front()->pos;
  }

  // The (word, pos) entry, or the word's only entry when the tag differs.
  std::string single_meaning_lookup(std::string_view word, std::string_view pos) const {
    const auto vs = variants(word);
    if (vs.empty()) throw Error(ErrorKind::WordUnknown, std::string(word));
    const LexiconEntry* entry = find(word, pos);
    if (entry == nullptr && vs.size() == 1) entry = vs.front();
    if (entry == nullptr) {
      throw Error(ErrorKind::WordUnknown, std::string(word) + "/" + std::string(pos));
    }
    if (entry->sense_count != 1) {
      throw Error(ErrorKind::NotSingleMeaning,
                  std::string(word) + " has " + std::to_string(entry->sense_count) + " senses");
    }
    return *entry->single_translation;
  }

  std::string serialize() const {
    std::string out;
    for (const auto& e : entries_) {
      out += e.surface;
      out += '\t';
      out += language_code(e.language);
      out += '\t';
      out += e.pos;
      out += '\t';
      out += std::to_string(e.sense_count);
      out += '\t';
      out += e.single_translation.value_or("");
      out += '\n';
    }
    return out;
  }

  bool operator==(const Lexicon& other) const {
    return language_ == other.language_ && entries_ == other.entries_;
  }

 private:
  Language language_;
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> index_;
};

inline Lexicon parse_lexicon(std::string_view content, Language language,
                             const std::string& source = "<lexicon>",
                             Warnings* warnings = nullptr) {
  Lexicon lexicon(language);
  for (const auto& line : split_lines(content)) {
    if (is_blank_or_comment(line.text)) continue;
    auto fields = split_tabs(line.text);
    if (fields.size() == 4) fields.emplace_back();
    if (fields.size() != 5) {
      throw Error(ErrorKind::FormatError,
                  "expected 5 tab-separated columns, got " + std::to_string(fields.size()),
                  source, line.number);
    }
    const auto lang = parse_language_code(fields[1]);
    if (!lang) {
      throw Error(ErrorKind::FormatError, "bad language '" + fields[1] + "'", source, line.number);
    }
    int senses = 0;
    const auto& sc = fields[3];
    auto [ptr, ec] = std::from_chars(sc.data(), sc.data() + sc.size(), senses);
    if (ec != std::errc() || ptr != sc.data() + sc.size()) {
      throw Error(ErrorKind::FormatError, "bad sense_count '" + sc + "'", source, line.number);
    }
    LexiconEntry entry{fields[0], *lang, fields[2], senses, std::nullopt};
    if (!fields[4].empty()) entry.single_translation = fields[4];
    try {
      lexicon.add(std::move(entry));
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), source, line.number);
    }
  }
  if (lexicon.empty()) warn(warnings, source + ": lexicon has no entries");
  return lexicon;
}

inline Lexicon load_lexicon(const std::filesystem::path& path, Language language,
                            Warnings* warnings = nullptr) {
  return parse_lexicon(read_file(path), language, path.string(), warnings);
}

}  // namespace ontomt
