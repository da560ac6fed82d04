#include "eqparse/cli/commands.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqparse/cli/bundle.h"
#include "eqparse/error.h"
#include "eqparse/eval/corpus.h"
#include "eqparse/eval/evaluate.h"

namespace eqparse::cli {
namespace {

using nlohmann::json;

struct TrainFlags {
  int window = 2;
  int epochs = 5;
  int outer_iters = 10;
  std::uint64_t seed = 1;
  bool no_lexicon = false;
  bool lexicon_as_features = false;
  bool conform_syntactic = false;
  std::string lexicon_rules;
  std::string number_words;

  void attach(CLI::App* cmd) {
    cmd->add_option("--window", window, "Tree feature window")->check(CLI::NonNegativeNumber);
    cmd->add_option("--epochs", epochs, "Inner training epochs")->check(CLI::NonNegativeNumber);
    cmd->add_option("--outer-iters", outer_iters, "Superset selection rounds")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_flag("--no-lexicon", no_lexicon, "Decode without lexicon rules");
    cmd->add_flag("--lexicon-as-features", lexicon_as_features,
                  "Use lexicon rules as features instead of constraints");
    cmd->add_flag("--conform-syntactic", conform_syntactic,
                  "Keep tree nodes inside syntactic brackets");
    cmd->add_option("--lexicon-rules", lexicon_rules, "Lexicon rules file");
    cmd->add_option("--number-words", number_words, "Number word table");
  }

  BundleConfig config() const {
    BundleConfig c;
    c.tree.window = window;
    c.learner.epochs = epochs;
    c.learner.max_outer_iters = outer_iters;
    c.learner.seed = seed;
    c.tree.use_lexicon = !no_lexicon;
    c.tree.lexicon_as_features = lexicon_as_features;
    c.tree.conform_syntactic = conform_syntactic;
    return c;
  }

  LexiconRules rules() const {
    if (lexicon_rules.empty()) return LexiconRules::builtin();
    std::ifstream in(lexicon_rules);
    if (!in) throw DataError("cannot read lexicon rules " + lexicon_rules);
    return LexiconRules::parse(in);
  }

  NumberWordLexicon numbers() const {
    if (number_words.empty()) return NumberWordLexicon::builtin();
    std::ifstream in(number_words);
    if (!in) throw DataError("cannot read number words " + number_words);
    return NumberWordLexicon::parse(in);
  }
};

Span parse_span_arg(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0, used_b = 0;
    std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    Span s{std::stoi(a, &used_a), std::stoi(b, &used_b)};
    if (used_a != a.size() || used_b != b.size()) {
      throw std::invalid_argument(text);
    }
    return s;
  } catch (const std::logic_error&) {
    throw DataError("--np expects start:end, got '" + text + "'");
  }
}

void parse_lines(const BundlePredictor& predictor, std::istream& in,
                 std::ostream& out) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Sentence s = sentence_from_json(json::parse(raw), true);
      out << parse_result_to_json(s, run_pipeline(predictor, s)).dump()
          << '\n';
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line) + ": " + e.what());
    } catch (const Error& e) {
      throw DataError("line " + std::to_string(line) + ": " + e.what());
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Parse single sentences into equations over at most two "
               "variables."};
  app.require_subcommand(1);

  TrainFlags train_flags;
  std::string corpus_path, out_path;
  auto* train = app.add_subcommand("train", "Train a model bundle");
  train->add_option("--corpus", corpus_path, "JSON-lines corpus")->required();
  train->add_option("--out", out_path, "Bundle output path")->required();
  train_flags.attach(train);

  std::string model_path, input_path, text;
  std::vector<std::string> np_args;
  auto* parse = app.add_subcommand("parse", "Parse sentences");
  parse->add_option("--model", model_path, "Model bundle")->required();
  auto* input_opt =
      parse->add_option("--input", input_path,
                        "JSON-lines sentences, '-' for standard input");
  auto* text_opt = parse->add_option("--text", text, "Raw sentence text");
  parse->add_option("--np", np_args, "Noun phrase span start:end");
  input_opt->excludes(text_opt);

  std::string eval_model, eval_corpus;
  auto* eval = app.add_subcommand("eval", "Evaluate a bundle on a corpus");
  eval->add_option("--model", eval_model, "Model bundle")->required();
  eval->add_option("--corpus", eval_corpus, "JSON-lines corpus")->required();

  TrainFlags cv_flags;
  std::string cv_corpus;
  int folds = 5;
  auto* cv = app.add_subcommand("cv", "k-fold cross-validation");
  cv->add_option("--corpus", cv_corpus, "JSON-lines corpus")->required();
  cv->add_option("--folds", folds, "Number of folds")->check(CLI::Range(2, 1000000));
  cv_flags.attach(cv);

  std::vector<std::string> argv_store = {"eqparse"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*train) {
      auto corpus = read_corpus_file(corpus_path);
      TrainReport report;
      ModelBundle bundle =
          train_bundle(corpus, train_flags.config(), train_flags.rules(),
                       train_flags.numbers(), &report);
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw DataError("cannot write " + out_path);
      bundle.write(file);
      file.close();
      if (!file) throw DataError("failed writing " + out_path);
      out << json{{"bundle", out_path},
                  {"examples", report.examples},
                  {"relevance_examples", report.relevance_examples},
                  {"variable_examples", report.variable_examples},
                  {"tree_examples", report.tree_examples},
                  {"variable_outer_iterations",
                   report.variable_trace.outer_iterations},
                  {"variable_converged", report.variable_trace.converged}}
                 .dump()
          << '\n';
    } else if (*parse) {
      BundlePredictor predictor(ModelBundle::read_file(model_path));
      if (!text.empty()) {
        json j{{"text", text}};
        json nps = json::array();
        for (const std::string& s : np_args) {
          nps.push_back(span_to_json(parse_span_arg(s)));
        }
        if (!nps.empty()) j["np_chunks"] = nps;
        Sentence s = sentence_from_json(j, true);
        out << parse_result_to_json(s, run_pipeline(predictor, s)).dump()
            << '\n';
      } else if (input_path.empty() || input_path == "-") {
        parse_lines(predictor, in, out);
      } else {
        std::ifstream file(input_path);
        if (!file) throw DataError("cannot read " + input_path);
        parse_lines(predictor, file, out);
      }
    } else if (*eval) {
      BundlePredictor predictor(ModelBundle::read_file(eval_model));
      auto corpus = read_corpus_file(eval_corpus);
      if (corpus.empty()) throw DataError("corpus is empty");
      out << evaluate(predictor, corpus).to_json().dump() << '\n';
    } else if (*cv) {
      auto corpus = read_corpus_file(cv_corpus);
      BundleConfig config = cv_flags.config();
      LexiconRules rules = cv_flags.rules();
      NumberWordLexicon numbers = cv_flags.numbers();
      CrossValidation result = cross_validate(
          corpus, folds, config.learner.seed,
          [&](const std::vector<AnnotatedExample>& train_set) {
            return std::make_unique<BundlePredictor>(
                train_bundle(train_set, config, rules, numbers));
          });
      json fold_json = json::array();
      for (const Metrics& m : result.folds) fold_json.push_back(m.to_json());
      out << json{{"folds", folds},
                  {"seed", config.learner.seed},
                  {"mean", result.mean.to_json()},
                  {"per_fold", fold_json}}
                 .dump()
          << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace eqparse::cli
