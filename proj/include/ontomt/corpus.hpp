#pragma once

// Parallel evaluation corpus.
//
// Records are separated by blank lines. Fields:
//   id: ShibamE1
//   lang: en
//   context: Shibam        (optional; empty means auto-detect)
//   source: text that may continue
//     on following lines until the next field
//   reference: human translation, also multi-line

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontomt/error.hpp"
#include "ontomt/lang_context.hpp"
#include "ontomt/language.hpp"
#include "ontomt/resource_io.hpp"
#include "ontomt/text.hpp"

namespace ontomt {

struct CorpusRecord {
  std::string id;
  Language language = Language::English;
  std::string context;
  std::string source_text;
  std::string reference_translation;
  std::size_t line = 0;  // where the record starts
};

namespace detail {

struct RecordDraft {
  std::size_t line = 0;
  std::string id, lang, context, source, reference;
  bool has_id = false, has_lang = false, has_source = false, has_reference = false;
  std::string* current = nullptr;
  bool empty() const { return line == 0; }
};

inline CorpusRecord finish_record(RecordDraft& d, const std::string& file,
                                  std::set<std::string>& ids) {
  auto need = [&](bool present, const char* field) {
    if (!present) throw Error(ErrorKind::FormatError, std::string("record lacks '") + field + ":'", file, d.line);
  };
  need(d.has_id, "id");
  need(d.has_lang, "lang");
  need(d.has_source, "source");
  need(d.has_reference, "reference");
  CorpusRecord r;
  r.id = text::trim(d.id);
  r.line = d.line;
  if (r.id.empty()) throw Error(ErrorKind::FormatError, "empty id", file, d.line);
  if (!ids.insert(r.id).second) throw Error(ErrorKind::DuplicateEntry, "record id " + r.id, file, d.line);
  const auto lang = parse_language_code(text::trim(d.lang));
  if (!lang) throw Error(ErrorKind::FormatError, "bad lang '" + text::trim(d.lang) + "'", file, d.line);
  r.language = *lang;
  r.context = text::trim(d.context);
  r.source_text = text::trim(d.source);
  r.reference_translation = text::trim(d.reference);
  if (r.source_text.empty()) throw Error(ErrorKind::FormatError, "empty source in " + r.id, file, d.line);
  if (!r.reference_translation.empty()) {
    try {
      if (identify_language(r.reference_translation) != opposite(r.language)) {
        throw Error(ErrorKind::InvariantViolation,
                    "reference of " + r.id + " is not in the target language", file, d.line);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvariantViolation) throw;
    }
  }
  return r;
}

}  // namespace detail

inline std::vector<CorpusRecord> parse_corpus(std::string_view content,
                                              const std::string& file = "<corpus>",
                                              Warnings* warnings = nullptr) {
  std::vector<CorpusRecord> records;
  std::set<std::string> ids;
  detail::RecordDraft draft;
  auto flush = [&] {
    if (!draft.empty()) records.push_back(detail::finish_record(draft, file, ids));
    draft = {};
  };
  for (const auto& line : split_lines(content)) {
    if (text::trim(line.text).empty()) {
      flush();
      continue;
    }
    if (line.text.front() == '#') continue;
    const auto colon = line.text.find(':');
    const auto name = colon == std::string::npos ? std::string() : line.text.substr(0, colon);
    struct Field {
      const char* name;
      std::string detail::RecordDraft::*value;
      bool detail::RecordDraft::*seen;
    };
    static constexpr Field kFields[] = {
        {"id", &detail::RecordDraft::id, &detail::RecordDraft::has_id},
        {"lang", &detail::RecordDraft::lang, &detail::RecordDraft::has_lang},
        {"context", &detail::RecordDraft::context, nullptr},
        {"source", &detail::RecordDraft::source, &detail::RecordDraft::has_source},
        {"reference", &detail::RecordDraft::reference, &detail::RecordDraft::has_reference},
    };
    const Field* field = nullptr;
    for (const auto& f : kFields) {
      if (name == f.name) field = &f;
    }
    if (field != nullptr) {
      if (draft.empty()) draft.line = line.number;
      if (field->seen != nullptr) {
        if (draft.*(field->seen)) {
          throw Error(ErrorKind::FormatError, "repeated field '" + name + ":'", file, line.number);
        }
        draft.*(field->seen) = true;
      }
      draft.*(field->value) = line.text.substr(colon + 1);
      draft.current = &(draft.*(field->value));
      continue;
    }
    if (draft.current == nullptr) {
      throw Error(ErrorKind::FormatError, "text outside a field", file, line.number);
    }
    *draft.current += "\n" + line.text;
  }
  flush();
  if (records.empty()) warn(warnings, file + ": corpus has no records");
  return records;
}

inline std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path,
                                             Warnings* warnings = nullptr) {
  return parse_corpus(read_file(path), path.string(), warnings);
}

}  // namespace ontomt
