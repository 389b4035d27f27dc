#pragma once

// Command bodies for the ontomt tool. Each returns the process exit status
// and writes results to `out`, diagnostics to `err`.

#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>

#include "ontomt/ontomt.hpp"

namespace ontomt::cli {

inline constexpr int kOk = 0;

inline int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return exit_code(e.kind());
}

inline void print_warnings(const Warnings& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

struct TranslateArgs {
  std::filesystem::path bundle;
  std::optional<std::string> lang;
  std::optional<std::string> context;
  bool trace = false;
  std::string trace_format = "report";
  std::optional<std::filesystem::path> input;
  std::string text;
};

inline TranslateOptions translate_options(const std::optional<std::string>& lang,
                                          const std::optional<std::string>& context) {
  TranslateOptions opt;
  if (lang) {
    opt.source = parse_language_code(*lang);
    if (!opt.source) throw Error(ErrorKind::Usage, "--lang must be 'ar' or 'en', got '" + *lang + "'");
  }
  if (context && !context->empty()) opt.context = *context;
  return opt;
}

inline int cmd_translate(const TranslateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto options = translate_options(args.lang, args.context);
    if (args.trace_format != "report" && args.trace_format != "kv") {
      throw Error(ErrorKind::Usage, "--trace-format must be 'report' or 'kv'");
    }
    std::string input = args.text;
    if (args.input) {
      if (!args.text.empty()) throw Error(ErrorKind::Usage, "give either --input or text, not both");
      input = read_file(*args.input);
    }
    const auto bundle = load_bundle(args.bundle);
    print_warnings(bundle.warnings, err);
    const auto result = translate(input, bundle.resources, options);
    if (!result.output.empty()) out << result.output << "\n";
    if (args.trace) out << (args.trace_format == "kv" ? format_kv(result) : format_report(result));
    if (const auto e = result.first_error()) {
      err << "error: [" << e->stage << "] " << kind_name(e->kind) << ": " << e->message << "\n";
      return exit_code(e->kind);
    }
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

struct EvaluateArgs {
  std::filesystem::path bundle;
  std::optional<std::filesystem::path> corpus;  // default: the bundle's corpus.txt
  std::string format = "table";
};

// Translator used by evaluate: per-record language and context; any
// recorded error fails the row.
inline Translator bundle_translator(const Resources& resources) {
  return [&resources](const CorpusRecord& record) {
    TranslateOptions opt;
    opt.source = record.language;
    if (!record.context.empty()) opt.context = record.context;
    const auto result = translate(record.source_text, resources, opt);
    if (const auto e = result.first_error()) throw Error(e->kind, "[" + e->stage + "] " + e->message);
    return result.output;
  };
}

inline int cmd_evaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.format != "table" && args.format != "tsv") {
      throw Error(ErrorKind::Usage, "--format must be 'table' or 'tsv'");
    }
    const auto bundle = load_bundle(args.bundle);
    print_warnings(bundle.warnings, err);
    Warnings warnings;
    std::vector<CorpusRecord> corpus;
    if (args.corpus) {
      corpus = load_corpus(*args.corpus, &warnings);
    } else if (bundle.corpus) {
      corpus = *bundle.corpus;
    } else {
      throw Error(ErrorKind::Usage, "no --corpus given and the bundle has no corpus.txt");
    }
    print_warnings(warnings, err);
    const auto eval = evaluate_corpus(corpus, bundle_translator(bundle.resources));
    out << (args.format == "tsv" ? format_evaluation_tsv(eval) : format_evaluation_table(eval));
    if (eval.flagged > 0) {
      for (const auto& row : eval.rows) {
        if (row.flagged()) err << "error: row " << row.id << ": " << row.error << "\n";
      }
      return exit_code(ErrorKind::RowErrors);
    }
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

inline int cmd_validate(const std::filesystem::path& bundle, std::ostream& out, std::ostream& err) {
  const auto report = validate_bundle(bundle);
  for (const auto& line : report.checked) out << "checked " << line << "\n";
  print_warnings(report.warnings, err);
  for (const auto& e : report.errors) err << "error: " << e.what() << "\n";
  if (!report.ok()) {
    out << "FAILED (" << report.errors.size() << " error" << (report.errors.size() == 1 ? "" : "s")
        << ")\n";
    return exit_code(report.errors.front().kind());
  }
  out << "OK\n";
  return kOk;
}

struct CorpusSizeArgs {
  std::filesystem::path corpus;
  std::string length = "tokens";
};

inline int cmd_corpus_size(const CorpusSizeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    LengthUnit unit = LengthUnit::Tokens;
    if (args.length == "chars") {
      unit = LengthUnit::Characters;
    } else if (args.length != "tokens") {
      throw Error(ErrorKind::Usage, "--length must be 'tokens' or 'chars'");
    }
    Warnings warnings;
    const auto corpus = load_corpus(args.corpus, &warnings);
    print_warnings(warnings, err);
    out << std::fixed << std::setprecision(7) << corpus_size(corpus, unit) << "\n";
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

}  // namespace ontomt::cli
