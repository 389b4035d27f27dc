#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  using namespace ontomt;

  CLI::App app{"Ontology-based Arabic/English transfer translation"};
  app.require_subcommand(1);

  cli::TranslateArgs tr;
  std::string tr_lang, tr_context, tr_input;
  std::vector<std::string> tr_words;
  auto* translate = app.add_subcommand("translate", "Translate text");
  translate->add_option("--bundle", tr.bundle, "Resource bundle directory")->required();
  translate->add_option("--lang", tr_lang, "Source language (ar|en); detected when omitted");
  translate->add_option("--context", tr_context, "Context name; detected when omitted");
  translate->add_flag("--trace", tr.trace, "Append the stage-by-stage trace");
  translate->add_option("--trace-format", tr.trace_format, "report|kv");
  translate->add_option("--input", tr_input, "Read the text from a file");
  translate->add_option("text", tr_words, "Text to translate");

  cli::EvaluateArgs ev;
  std::string ev_corpus;
  auto* evaluate = app.add_subcommand("evaluate", "Score translations against references");
  evaluate->add_option("--bundle", ev.bundle, "Resource bundle directory")->required();
  evaluate->add_option("--corpus", ev_corpus, "Corpus file; defaults to the bundle's corpus.txt");
  evaluate->add_option("--format", ev.format, "table|tsv");

  std::string va_bundle;
  auto* validate = app.add_subcommand("validate", "Check every resource in a bundle");
  validate->add_option("--bundle", va_bundle, "Resource bundle directory")->required();

  cli::CorpusSizeArgs cs;
  auto* size = app.add_subcommand("corpus-size", "Print the corpus size measure");
  size->add_option("--corpus", cs.corpus, "Corpus file")->required();
  size->add_option("--length", cs.length, "tokens|chars");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cout, std::cerr);
    return exit_code(ErrorKind::Usage);
  }

  if (*translate) {
    if (!tr_lang.empty()) tr.lang = tr_lang;
    if (!tr_context.empty()) tr.context = tr_context;
    if (!tr_input.empty()) tr.input = tr_input;
    for (const auto& w : tr_words) tr.text += (tr.text.empty() ? "" : " ") + w;
    return cli::cmd_translate(tr, std::cout, std::cerr);
  }
  if (*evaluate) {
    if (!ev_corpus.empty()) ev.corpus = ev_corpus;
    return cli::cmd_evaluate(ev, std::cout, std::cerr);
  }
  if (*validate) return cli::cmd_validate(va_bundle, std::cout, std::cerr);
  return cli::cmd_corpus_size(cs, std::cout, std::cerr);
}
