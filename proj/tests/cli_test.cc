#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "eqparse/cli/commands.h"
#include "eqparse/core/expression.h"
#include "eqparse/eval/equivalence.h"
#include "json.hpp"
#include "test_util.h"

namespace eqparse {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() /
           ("eqparse_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    std::ofstream all(dir_ / "all.jsonl");
    all << slurp(testing::data_path("synthetic.jsonl"))
        << slurp(testing::data_path("comparisons.jsonl"));
    all.close();
    Result r = run({"train", "--corpus", (dir_ / "all.jsonl").string(), "--out",
                    bundle().string()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static fs::path bundle() { return dir_ / "model.bundle"; }
  static fs::path corpus() { return dir_ / "all.jsonl"; }

  static fs::path dir_;
};

fs::path CliTest::dir_;

TEST_F(CliTest, BundleHasEveryStage) {
  std::string text = slurp(bundle());
  EXPECT_EQ(text.rfind("eqparse-bundle 1\n", 0), 0u);
  for (const char* s : {"section lexicon ", "section number_words ",
                        "section relevance ", "section variables ",
                        "section tree "}) {
    EXPECT_NE(text.find(s), std::string::npos) << s;
  }
}

TEST_F(CliTest, TrainReportIsJson) {
  Result r = run({"train", "--corpus", corpus().string(), "--out",
                  (dir_ / "again.bundle").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_GT(j["examples"].get<int>(), 40);
  EXPECT_GT(j["tree_examples"].get<int>(), 0);
}

TEST_F(CliTest, RetrainingIsByteIdentical) {
  fs::path again = dir_ / "same.bundle";
  ASSERT_EQ(run({"train", "--corpus", corpus().string(), "--out",
                 again.string()})
                .code,
            0);
  EXPECT_EQ(slurp(again), slurp(bundle()));
}

TEST_F(CliTest, ParsesRunningExample) {
  Result r = run({"parse", "--model", bundle().string(), "--text",
                  "Twice a number equals 25 less than triple the same number.",
                  "--np", "6:14", "--np", "42:57"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(equations_equal(parse_equation(j["equation"].get<std::string>()),
                              parse_equation("(= (* 2 V1) (- (* 3 V1) 25))")))
      << j.dump();
  ASSERT_EQ(j["groundings"].size(), 2u);
  EXPECT_EQ(j["groundings"][0]["text"], "a number");
  EXPECT_EQ(j["groundings"][1]["text"], "the same number");
  EXPECT_EQ(j["groundings"][1]["label"], "V1");
}

TEST_F(CliTest, ParsesTwoVariableSum) {
  Result r = run({"parse", "--model", bundle().string(), "--text",
                  "The sum of two numbers is 80.", "--np", "0:7", "--np",
                  "11:22"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(equations_equal(parse_equation(j["equation"].get<std::string>()),
                              parse_equation("(= (+ V1 V2) 80)")))
      << j.dump();
  ASSERT_EQ(j["groundings"].size(), 2u);
  EXPECT_EQ(j["groundings"][0]["text"], "two numbers");
  EXPECT_EQ(j["groundings"][1]["text"], "two numbers");
}

TEST_F(CliTest, ParsesJsonLinesFromStdin) {
  std::string line =
      R"j({"text": "There are 54 5-dollar and 10-dollar notes.", "tokens": ["There", "are", "54", "5-dollar", "and", "10-dollar", "notes", "."], "pos": ["EX", "VBP", "CD", "JJ", "CC", "JJ", "NNS", "."], "np_chunks": [[13, 21], [26, 41]]})j";
  Result r = run({"parse", "--model", bundle().string(), "--input", "-"},
                 line + "\n\n" + line + "\n");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  json j = json::parse(first);
  EXPECT_TRUE(equations_equal(parse_equation(j["equation"].get<std::string>()),
                              parse_equation("(= 54 (+ V1 V2))")))
      << j.dump();
  EXPECT_EQ(j["debug"]["quantities"][1]["relevant"], false);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST_F(CliTest, MissingNounPhrasesIsDataError) {
  Result r = run({"parse", "--model", bundle().string(), "--text",
                  "A number is 5."});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("np_chunks"), std::string::npos) << r.err;
  Result bad = run({"parse", "--model", bundle().string(), "--input", "-"},
                   "{\"text\": \"A number is 5.\"}\n");
  EXPECT_EQ(bad.code, cli::kExitData);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos) << bad.err;
  Result span = run({"parse", "--model", bundle().string(), "--text",
                     "A number is 5.", "--np", "0-8"});
  EXPECT_EQ(span.code, cli::kExitData);
}

TEST_F(CliTest, EvalAtLeastCrossValidation) {
  Result e = run({"eval", "--model", bundle().string(), "--corpus",
                  corpus().string()});
  ASSERT_EQ(e.code, 0) << e.err;
  Result cv = run({"cv", "--corpus", corpus().string(), "--folds", "5"});
  ASSERT_EQ(cv.code, 0) << cv.err;
  json ej = json::parse(e.out), cj = json::parse(cv.out);
  EXPECT_GE(ej["equation_accuracy"].get<double>(),
            cj["mean"]["equation_accuracy"].get<double>());
  EXPECT_EQ(cj["per_fold"].size(), 5u);
  EXPECT_EQ(cj["folds"], 5);
}

TEST_F(CliTest, CrossValidationIsDeterministic) {
  std::vector<std::string> args = {"cv", "--corpus", corpus().string(),
                                   "--folds", "4", "--seed", "3"};
  Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, AblationFlagsRoundTripThroughBundle) {
  fs::path p = dir_ / "ablate.bundle";
  Result r = run({"train", "--corpus", corpus().string(), "--out", p.string(),
                  "--no-lexicon", "--conform-syntactic", "--window", "1",
                  "--epochs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string text = slurp(p);
  EXPECT_NE(text.find("use_lexicon=0"), std::string::npos);
  EXPECT_NE(text.find("conform_syntactic=1"), std::string::npos);
  EXPECT_NE(text.find("tree_window=1"), std::string::npos);
  EXPECT_EQ(run({"eval", "--model", p.string(), "--corpus", corpus().string()})
                .code,
            0);
}

TEST_F(CliTest, DataErrors) {
  fs::path one = dir_ / "one.jsonl";
  {
    std::ofstream f(one);
    std::ifstream src(testing::data_path("comparisons.jsonl"));
    std::string line;
    std::getline(src, line);
    f << line << "\n";
  }
  Result small = run({"train", "--corpus", one.string(), "--out",
                      (dir_ / "x.bundle").string()});
  EXPECT_EQ(small.code, cli::kExitData);
  EXPECT_NE(small.err.find("corpus too small"), std::string::npos);

  fs::path empty = dir_ / "empty.jsonl";
  std::ofstream(empty).close();
  EXPECT_EQ(run({"eval", "--model", bundle().string(), "--corpus",
                 empty.string()})
                .code,
            cli::kExitData);
  EXPECT_EQ(run({"eval", "--model", (dir_ / "missing.bundle").string(),
                 "--corpus", corpus().string()})
                .code,
            cli::kExitData);
  fs::path junk = dir_ / "junk.bundle";
  std::ofstream(junk) << "not a bundle\n";
  EXPECT_EQ(run({"parse", "--model", junk.string(), "--text", "x", "--np",
                 "0:1"})
                .code,
            cli::kExitData);
  EXPECT_EQ(run({"cv", "--corpus", one.string(), "--folds", "2"}).code,
            cli::kExitData);
}

TEST(CliUsage, BadCommandLinesExitOne) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"train", "--corpus", "x.jsonl"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cv", "--corpus", "x.jsonl", "--folds", "1"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"cv", "--corpus", "x.jsonl", "--bogus"}).code,
            cli::kExitUsage);
  Result help = run({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("train"), std::string::npos);
}

}  // namespace
}  // namespace eqparse
