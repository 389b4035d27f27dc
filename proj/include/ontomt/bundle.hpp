#pragma once

// On-disk resource bundle.
//
//   manifest.txt           one context name per line
//   lexicon.ar.tsv         lexicon.en.tsv
//   ontology.<ctx>.txt     one per manifest entry, <ctx> lower-cased
//   parses.ar.txt          parses.en.txt
//   stopwords.ar.txt       stopwords.en.txt
//   corpus.txt             optional

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ontomt/corpus.hpp"
#include "ontomt/error.hpp"
#include "ontomt/lang_context.hpp"
#include "ontomt/lexicon.hpp"
#include "ontomt/ontology.hpp"
#include "ontomt/parsing.hpp"
#include "ontomt/pipeline.hpp"
#include "ontomt/resource_io.hpp"

namespace ontomt {

struct Bundle {
  std::filesystem::path directory;
  std::vector<std::string> contexts;  // manifest order
  Resources resources;
  std::optional<std::vector<CorpusRecord>> corpus;
  Warnings warnings;
};

namespace bundle_files {

inline std::filesystem::path manifest(const std::filesystem::path& dir) { return dir / "manifest.txt"; }
inline std::filesystem::path lexicon(const std::filesystem::path& dir, Language l) {
  return dir / ("lexicon." + std::string(language_code(l)) + ".tsv");
}
inline std::filesystem::path parses(const std::filesystem::path& dir, Language l) {
  return dir / ("parses." + std::string(language_code(l)) + ".txt");
}
inline std::filesystem::path stop_words(const std::filesystem::path& dir, Language l) {
  return dir / ("stopwords." + std::string(language_code(l)) + ".txt");
}
inline std::filesystem::path ontology(const std::filesystem::path& dir, std::string_view context) {
  return dir / ("ontology." + text::to_lower_ascii(context) + ".txt");
}
inline std::filesystem::path corpus(const std::filesystem::path& dir) { return dir / "corpus.txt"; }

}  // namespace bundle_files

inline std::vector<std::string> parse_manifest(std::string_view content,
                                               const std::string& source = "<manifest>") {
  std::vector<std::string> contexts;
  for (const auto& line : split_lines(content)) {
    if (is_blank_or_comment(line.text)) continue;
    auto name = text::trim(line.text);
    for (const auto& c : contexts) {
      if (text::iequals(c, name)) {
        throw Error(ErrorKind::DuplicateEntry, "context " + name, source, line.number);
      }
    }
    contexts.push_back(std::move(name));
  }
  if (contexts.empty()) throw Error(ErrorKind::FormatError, "manifest lists no contexts", source);
  return contexts;
}

namespace detail {

inline ContextOntology load_manifest_ontology(const std::filesystem::path& dir,
                                              const std::string& context, Warnings* warnings) {
  const auto path = bundle_files::ontology(dir, context);
  auto ontology = load_ontology(path, warnings);
  if (!text::iequals(ontology.context(), context)) {
    throw Error(ErrorKind::InvariantViolation,
                "header names '" + ontology.context() + "', manifest expects '" + context + "'",
                path.string(), 1);
  }
  return ontology;
}

}  // namespace detail

// Loads everything or throws the first error, with its file and line.
inline Bundle load_bundle(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorKind::FileUnreadable, "not a bundle directory", dir.string());
  }
  Bundle b;
  b.directory = dir;
  const auto manifest = bundle_files::manifest(dir);
  b.contexts = parse_manifest(read_file(manifest), manifest.string());
  auto& r = b.resources;
  r.arabic_lexicon = load_lexicon(bundle_files::lexicon(dir, Language::Arabic), Language::Arabic, &b.warnings);
  r.english_lexicon = load_lexicon(bundle_files::lexicon(dir, Language::English), Language::English, &b.warnings);
  for (const auto& context : b.contexts) {
    r.ontologies.add(detail::load_manifest_ontology(dir, context, &b.warnings));
  }
  r.arabic_parses = load_parse_store(bundle_files::parses(dir, Language::Arabic), Language::Arabic, &b.warnings);
  r.english_parses = load_parse_store(bundle_files::parses(dir, Language::English), Language::English, &b.warnings);
  r.arabic_stop_words = load_stop_words(bundle_files::stop_words(dir, Language::Arabic));
  r.english_stop_words = load_stop_words(bundle_files::stop_words(dir, Language::English));
  if (std::filesystem::exists(bundle_files::corpus(dir))) {
    b.corpus = load_corpus(bundle_files::corpus(dir), &b.warnings);
  }
  return b;
}

struct ValidationReport {
  std::vector<Error> errors;
  Warnings warnings;
  std::vector<std::string> checked;  // one summary line per resource that loaded
  bool ok() const { return errors.empty(); }
};

namespace detail {

template <typename Fn>
void check(ValidationReport& report, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    report.errors.push_back(e);
  }
}

// Every stored tree must read back and write back identically. Trees whose
// leaves differ from the sentence they are filed under are reported as
// warnings.
inline void check_parse_file(ValidationReport& report, const std::filesystem::path& path) {
  const auto content = read_file(path);
  for (const auto& line : split_lines(content)) {
    if (is_blank_or_comment(line.text)) continue;
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2) continue;  // already reported by the loader
    check(report, [&] {
      try {
        const auto tree = read_bracketed(fields[1]);
        const auto written = write_bracketed(tree);
        if (!(read_bracketed(written) == tree)) {
          throw Error(ErrorKind::InvariantViolation, "tree does not survive a write/read round trip");
        }
        // Spaces are ignored: trees may split clitics off a written word.
        auto squeeze = [](std::string s) {
          std::erase(s, ' ');
          return s;
        };
        std::string leaves;
        for (const auto& tok : tokens(tree)) leaves += tok.surface + " ";
        if (squeeze(sentence_key(leaves)) != squeeze(sentence_key(fields[0]))) {
          // Spelling variants may share a recorded tree; worth a look, not fatal.
          warn(&report.warnings, path.string() + ":" + std::to_string(line.number) +
                                     ": tree leaves '" + sentence_key(leaves) +
                                     "' differ from sentence '" + sentence_key(fields[0]) + "'");
        }
      } catch (const Error& e) {
        throw Error(e.kind(), e.detail(), path.string(), line.number);
      }
    });
  }
}

}  // namespace detail

// Loads each resource independently so one broken file does not hide
// problems in the others.
inline ValidationReport validate_bundle(const std::filesystem::path& dir) {
  ValidationReport report;
  if (!std::filesystem::is_directory(dir)) {
    report.errors.emplace_back(ErrorKind::FileUnreadable, "not a bundle directory", dir.string());
    return report;
  }
  std::vector<std::string> contexts;
  detail::check(report, [&] {
    const auto path = bundle_files::manifest(dir);
    contexts = parse_manifest(read_file(path), path.string());
    report.checked.push_back(path.filename().string() + ": " + std::to_string(contexts.size()) + " contexts");
  });

  for (Language lang : {Language::Arabic, Language::English}) {
    detail::check(report, [&] {
      const auto path = bundle_files::lexicon(dir, lang);
      const auto lexicon = load_lexicon(path, lang, &report.warnings);
      if (!(parse_lexicon(lexicon.serialize(), lang) == lexicon)) {
        throw Error(ErrorKind::InvariantViolation, "lexicon does not survive serialization", path.string());
      }
      report.checked.push_back(path.filename().string() + ": " + std::to_string(lexicon.size()) + " entries");
    });
  }

  OntologyRegistry registry;
  for (const auto& context : contexts) {
    detail::check(report, [&] {
      auto ontology = detail::load_manifest_ontology(dir, context, &report.warnings);
      const auto name = bundle_files::ontology(dir, context).filename().string();
      report.checked.push_back(name + ": " + std::to_string(ontology.size()) + " concepts");
      registry.add(std::move(ontology));
    });
  }

  for (Language lang : {Language::Arabic, Language::English}) {
    detail::check(report, [&] {
      const auto path = bundle_files::parses(dir, lang);
      const auto store = load_parse_store(path, lang, &report.warnings);
      const auto before = report.errors.size();
      detail::check_parse_file(report, path);
      if (report.errors.size() == before) {
        report.checked.push_back(path.filename().string() + ": " + std::to_string(store.size()) + " trees");
      }
    });
    detail::check(report, [&] {
      const auto path = bundle_files::stop_words(dir, lang);
      const auto stop = load_stop_words(path);
      report.checked.push_back(path.filename().string() + ": " + std::to_string(stop.size()) + " words");
    });
  }

  if (std::filesystem::exists(bundle_files::corpus(dir))) {
    detail::check(report, [&] {
      const auto path = bundle_files::corpus(dir);
      const auto corpus = load_corpus(path, &report.warnings);
      for (const auto& rec : corpus) {
        if (!rec.context.empty() && !registry.find(rec.context)) {
          throw Error(ErrorKind::ContextUnregistered,
                      "record " + rec.id + " names context '" + rec.context + "'", path.string(),
                      rec.line);
        }
      }
      report.checked.push_back(path.filename().string() + ": " + std::to_string(corpus.size()) + " records");
    });
  }
  return report;
}

}  // namespace ontomt
