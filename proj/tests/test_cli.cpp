#include <gtest/gtest.h>

#include <sstream>

#include "cli_commands.hpp"
#include "test_support.hpp"

using namespace ontomt;
using namespace ontomt::cli;

TEST(CliTranslate, PrintsOutputAndTrace) {
  TranslateArgs args;
  args.bundle = ONTOMT_BUNDLE_DIR;
  args.text = "وبعد الاسلام أصبحت شبام مدينة عامرة";
  args.trace = true;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_translate(args, out, err), kOk) << err.str();
  EXPECT_EQ(out.str().rfind("After Islam, Shibam became a populated city.\n", 0), 0u);
  EXPECT_NE(out.str().find("Reordering: "), std::string::npos);
}

TEST(CliTranslate, KvTraceAndOverrides) {
  TranslateArgs args;
  args.bundle = ONTOMT_BUNDLE_DIR;
  args.text = "line";
  args.lang = "en";
  args.context = "Calligraphy";
  args.trace = true;
  args.trace_format = "kv";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_translate(args, out, err), kOk) << err.str();
  EXPECT_NE(out.str().find("output=سطر\n"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("context=Calligraphy\n"), std::string::npos);
}

TEST(CliTranslate, UsageErrors) {
  TranslateArgs args;
  args.bundle = ONTOMT_BUNDLE_DIR;
  args.text = "line";
  args.lang = "fr";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_translate(args, out, err), exit_code(ErrorKind::Usage));
  args.lang.reset();
  args.trace_format = "xml";
  EXPECT_EQ(cmd_translate(args, out, err), exit_code(ErrorKind::Usage));
}

TEST(CliTranslate, ErrorsMapToExitCodes) {
  TranslateArgs args;
  args.bundle = "/nonexistent/ontomt";
  args.text = "line";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_translate(args, out, err), exit_code(ErrorKind::FileUnreadable));
  EXPECT_NE(err.str().find("FileUnreadable"), std::string::npos);
  args.bundle = ONTOMT_BUNDLE_DIR;
  args.text = "";
  EXPECT_EQ(cmd_translate(args, out, err), exit_code(ErrorKind::EmptyInput));
}

TEST(CliTranslate, InputFile) {
  testsupport::ScratchDir dir("cli_input");
  dir.write("in.txt", "Globalization changed the market.\n");
  TranslateArgs args;
  args.bundle = ONTOMT_BUNDLE_DIR;
  args.input = dir.path() / "in.txt";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_translate(args, out, err), kOk) << err.str();
  EXPECT_FALSE(out.str().empty());
  args.text = "also text";
  EXPECT_EQ(cmd_translate(args, out, err), exit_code(ErrorKind::Usage));
}

TEST(CliEvaluate, GoldenCorpusTsv) {
  EvaluateArgs args;
  args.bundle = ONTOMT_BUNDLE_DIR;
  args.corpus = testsupport::data_dir() / "golden_corpus.txt";
  args.format = "tsv";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_evaluate(args, out, err), kOk) << err.str();
  EXPECT_NE(out.str().find("CinemaTrace\ten\t1.000000\t0.000000\t1.000000\t1.000000\t1.000000\tok\n"),
            std::string::npos)
      << out.str();
  EXPECT_NE(out.str().find("ShibamTrace\tar\t1.000000\t0.000000\t"), std::string::npos);
}

TEST(CliEvaluate, FlaggedRowsExit) {
  testsupport::ScratchDir dir("cli_eval");
  dir.write("c.txt", "id: Bad\nlang: en\ncontext: Cinema\nsource: zebra\nreference: حمار وحشي\n");
  EvaluateArgs args;
  args.bundle = ONTOMT_BUNDLE_DIR;
  args.corpus = dir.path() / "c.txt";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_evaluate(args, out, err), exit_code(ErrorKind::RowErrors));
  EXPECT_NE(err.str().find("row Bad"), std::string::npos);
}

TEST(CliValidate, Shipped) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_validate(ONTOMT_BUNDLE_DIR, out, err), kOk);
  EXPECT_NE(out.str().find("\nOK\n"), std::string::npos);
}

TEST(CliCorpusSize, GoldenCorpus) {
  CorpusSizeArgs args;
  args.corpus = testsupport::data_dir() / "golden_corpus.txt";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_corpus_size(args, out, err), kOk);
  EXPECT_EQ(out.str(), "14.3178211\n");
  args.length = "lines";
  EXPECT_EQ(cmd_corpus_size(args, out, err), exit_code(ErrorKind::Usage));
}
