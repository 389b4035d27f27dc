#pragma once

// Trace serialization: a labeled stage-by-stage report for people and a
// flat key=value dump for scripts.

#include <sstream>
#include <string>
#include <vector>

#include "ontomt/parse_tree.hpp"
#include "ontomt/pipeline.hpp"

namespace ontomt {

namespace detail {

inline std::string morph_row(const TranslationTrace& t) {
  std::string out;
  for (const auto& sc : t.sense_counts) {
    if (!out.empty()) out += ", ";
    out += sc.surface + ":" + (sc.count ? std::to_string(*sc.count) : std::string("?"));
  }
  return out;
}

inline bool is_semantic(const TargetItem& it, const TranslationTrace& t) {
  if (!t.split) return false;
  if (it.span > 1) return true;
  for (const auto& tok : t.split->multi) {
    if (tok.index == it.source_index) return true;
  }
  return false;
}

inline std::string item_row(const TranslationTrace& t, bool semantic) {
  std::string out;
  for (const auto& it : t.items) {
    if (is_semantic(it, t) != semantic) continue;
    if (!out.empty()) out += ", ";
    out += it.source_surface + ": " + it.target_text;
  }
  return out;
}

// Keeps the kv dump one line per key.
inline std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace detail

inline std::string format_report(const TranslationResult& result) {
  std::ostringstream out;
  if (result.sentences.empty() && result.fatal) {
    out << "Error: [" << result.fatal->stage << "] " << kind_name(result.fatal->kind) << ": "
        << result.fatal->message << "\n";
    return out.str();
  }
  const bool numbered = result.sentences.size() > 1;
  for (std::size_t i = 0; i < result.sentences.size(); ++i) {
    const auto& t = result.sentences[i];
    if (numbered) out << "== Sentence " << (i + 1) << " ==\n";
    out << "Language Identification: " << t.input << ": " << language_name(t.language)
        << " Source, " << t.context << " Context\n";
    if (t.parse) {
      out << "Parser: " << write_bracketed(*t.parse)
          << (t.parse_from_store ? "" : "  [fallback]") << "\n";
    }
    if (t.split) {
      out << "Morphological Analyzer: " << detail::morph_row(t) << "\n";
    }
    if (!t.items.empty()) {
      out << "Semantic Analyser: " << detail::item_row(t, true) << "\n";
      out << "Translator: " << detail::item_row(t, false) << "\n";
    }
    if (t.replaced) out << "Replacement: " << *t.replaced << "\n";
    if (t.reordered) out << "Reordering: " << *t.reordered << "\n";
    for (const auto& e : t.errors) {
      out << "Error: [" << e.stage << "] " << kind_name(e.kind) << ": " << e.message << "\n";
    }
  }
  return out.str();
}

inline std::string format_kv(const TranslationResult& result) {
  std::ostringstream out;
  out << "output=" << detail::one_line(result.output) << "\n";
  if (result.language) out << "language=" << language_code(*result.language) << "\n";
  out << "context=" << result.context << "\n";
  out << "sentences=" << result.sentences.size() << "\n";
  for (std::size_t i = 0; i < result.sentences.size(); ++i) {
    const auto& t = result.sentences[i];
    const auto p = "sentence." + std::to_string(i) + ".";
    out << p << "input=" << detail::one_line(t.input) << "\n";
    if (t.parse) {
      out << p << "parse=" << write_bracketed(*t.parse) << "\n";
      out << p << "parse_source=" << (t.parse_from_store ? "store" : "fallback") << "\n";
    }
    if (t.split) out << p << "morphology=" << detail::morph_row(t) << "\n";
    for (std::size_t k = 0; k < t.items.size(); ++k) {
      const auto& it = t.items[k];
      out << p << "item." << k << "=" << it.source_index << "\t" << it.source_surface << "\t"
          << it.source_pos << "\t" << origin_name(it.origin) << "\t" << it.target_text << "\n";
    }
    if (t.replaced) out << p << "replacement=" << *t.replaced << "\n";
    if (t.reordered) {
      out << p << "reordering=" << *t.reordered << "\n";
      out << p << "reorder_passes=" << t.reorder_passes << "\n";
    }
    for (std::size_t k = 0; k < t.errors.size(); ++k) {
      const auto& e = t.errors[k];
      out << p << "error." << k << "=" << e.stage << "\t" << kind_name(e.kind) << "\t"
          << detail::one_line(e.message) << "\n";
    }
  }
  if (result.fatal) {
    out << "fatal=" << result.fatal->stage << "\t" << kind_name(result.fatal->kind) << "\t"
        << detail::one_line(result.fatal->message) << "\n";
  }
  return out.str();
}

}  // namespace ontomt
