#pragma once

// End-to-end translation: language and context identification, parsing,
// meaning split, dictionary and ontology translation, replacement and
// reordering, with a per-sentence trace of every stage.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/lang_context.hpp"
#include "ontomt/language.hpp"
#include "ontomt/lexicon.hpp"
#include "ontomt/ontology.hpp"
#include "ontomt/parse_tree.hpp"
#include "ontomt/parsing.hpp"
#include "ontomt/reorder.hpp"
#include "ontomt/rules.hpp"
#include "ontomt/text.hpp"
#include "ontomt/transfer.hpp"

namespace ontomt {

// Everything the pipeline reads. Immutable once loaded; one instance can
// serve any number of concurrent translate() calls.
struct Resources {
  Lexicon arabic_lexicon{Language::Arabic};
  Lexicon english_lexicon{Language::English};
  OntologyRegistry ontologies;
  ParseStore arabic_parses{Language::Arabic};
  ParseStore english_parses{Language::English};
  StopWords arabic_stop_words;
  StopWords english_stop_words;
  TransferRules rules;

  const Lexicon& lexicon(Language l) const {
    return l == Language::Arabic ? arabic_lexicon : english_lexicon;
  }
  const ParseStore& parses(Language l) const {
    return l == Language::Arabic ? arabic_parses : english_parses;
  }
  const StopWords& stop_words(Language l) const {
    return l == Language::Arabic ? arabic_stop_words : english_stop_words;
  }
};

struct SenseCount {
  std::string surface;
  std::optional<int> count;  // empty for words missing from the lexicon
};

// Stage snapshots for one sentence. A fatal error stops the stages after it
// but leaves the earlier snapshots in place.
struct TranslationTrace {
  std::string input;
  Language language = Language::English;
  std::string context;
  std::optional<ParseTree> parse;
  bool parse_from_store = false;
  std::vector<Token> tokens;
  std::optional<MeaningSplit> split;
  std::vector<SenseCount> sense_counts;
  std::vector<TargetItem> items;  // source order, after adjustments
  std::optional<std::string> replaced;
  std::optional<std::string> reordered;
  std::vector<TargetItem> reordered_items;
  std::size_t reorder_passes = 0;
  std::vector<StageError> errors;
  bool fatal = false;

  Language target() const { return opposite(language); }
};

struct TranslationResult {
  std::string output;
  std::optional<Language> language;
  std::string context;
  std::vector<TranslationTrace> sentences;
  std::optional<StageError> fatal;

  bool ok() const {
    if (fatal) return false;
    for (const auto& s : sentences) {
      if (!s.errors.empty()) return false;
    }
    return true;
  }

  // The first error recorded anywhere, fatal or per-token.
  std::optional<StageError> first_error() const {
    if (fatal) return fatal;
    for (const auto& s : sentences) {
      if (!s.errors.empty()) return s.errors.front();
    }
    return std::nullopt;
  }
};

struct TranslateOptions {
  std::optional<Language> source;
  std::optional<std::string> context;
};

namespace detail {

template <typename Fn>
bool run_stage(TranslationTrace& trace, std::string_view stage, Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const Error& e) {
    trace.errors.push_back({std::string(stage), e.kind(), e.detail()});
    trace.fatal = true;
    return false;
  }
}

}  // namespace detail

// Translates one sentence whose language and context are already decided.
inline TranslationTrace translate_sentence(std::string_view sentence, Language language,
                                           const std::string& context, const Resources& res) {
  TranslationTrace trace;
  trace.input = std::string(sentence);
  trace.language = language;
  trace.context = context;

  const ContextOntology* ontology = nullptr;
  if (!detail::run_stage(trace, "Language Identification",
                         [&] { ontology = &res.ontologies.lookup(context); })) {
    return trace;
  }
  const auto& lexicon = res.lexicon(language);
  const auto& rules = res.rules;

  if (!detail::run_stage(trace, "Parser", [&] {
        auto outcome = parse_sentence(sentence, language, res.parses(language), lexicon);
        trace.parse = std::move(outcome.tree);
        trace.parse_from_store = outcome.from_store;
        trace.tokens = tokens(*trace.parse);
      })) {
    return trace;
  }

  for (const auto& tok : trace.tokens) {
    SenseCount sc{tok.surface, std::nullopt};
    if (lexicon.contains(tok.normalized)) sc.count = lexicon.sense_count(tok.normalized);
    trace.sense_counts.push_back(std::move(sc));
  }

  std::vector<TargetItem> items;
  if (!detail::run_stage(trace, "Morphological Analyzer", [&] {
        trace.split = split_by_meaning(trace.tokens, lexicon,
                                       find_compounds(trace.tokens, *ontology, language));
        items = untranslated_items(trace.split->unknown, &trace.errors, rules);
      })) {
    return trace;
  }

  if (!detail::run_stage(trace, "Semantic Analyser", [&] {
        auto resolved = disambiguate_multi(trace.split->multi, language, *ontology, &trace.errors, rules);
        items.insert(items.end(), resolved.begin(), resolved.end());
        auto compounds = compound_items(trace.tokens, trace.split->compounds, language);
        items.insert(items.end(), compounds.begin(), compounds.end());
      })) {
    return trace;
  }

  if (!detail::run_stage(trace, "Translator", [&] {
        auto translated = translate_single(trace.split->single, lexicon);
        items.insert(items.end(), translated.begin(), translated.end());
        sort_by_source(items);
        adjust_function_words(items, *trace.parse, language, rules);
        trace.items = items;
      })) {
    return trace;
  }

  if (!detail::run_stage(trace, "Replacement", [&] {
        trace.replaced = replace(trace.tokens, trace.items, trace.target());
      })) {
    return trace;
  }

  detail::run_stage(trace, "Reordering", [&] {
    auto outcome = reorder(trace.items, *trace.parse, trace.target(), rules, ontology);
    trace.reordered = std::move(outcome.text);
    trace.reordered_items = std::move(outcome.items);
    trace.reorder_passes = outcome.passes;
  });
  return trace;
}

// Full pipeline. Never throws for input-dependent failures: the first fatal
// error stops processing and is returned with whatever traces exist.
inline TranslationResult translate(std::string_view input, const Resources& res,
                                   const TranslateOptions& options = {}) {
  TranslationResult result;
  auto fail = [&](std::string stage, const Error& e) {
    result.fatal = StageError{std::move(stage), e.kind(), e.detail()};
    return result;
  };

  const auto trimmed = text::trim(input);
  if (trimmed.empty()) return fail("Language Identification", Error(ErrorKind::EmptyInput, "no text"));

  try {
    result.language = options.source ? *options.source : identify_language(trimmed);
  } catch (const Error& e) {
    return fail("Language Identification", e);
  }
  try {
    result.context = options.context
                         ? override_context(*options.context, res.ontologies)
                         : identify_context(trimmed, *result.language, res.ontologies,
                                            res.stop_words(*result.language));
  } catch (const Error& e) {
    return fail("Context Identification", e);
  }

  std::vector<std::string> outputs;
  for (const auto& sentence : text::split_sentences(trimmed)) {
    auto trace = translate_sentence(sentence, *result.language, result.context, res);
    const bool fatal = trace.fatal;
    if (trace.reordered && !trace.reordered->empty()) outputs.push_back(*trace.reordered);
    if (fatal) result.fatal = trace.errors.back();
    result.sentences.push_back(std::move(trace));
    if (fatal) break;
  }
  for (const auto& o : outputs) {
    if (!result.output.empty()) result.output.push_back(' ');
    result.output += o;
  }
  return result;
}

}  // namespace ontomt
