#ifndef EQPARSE_CLI_BUNDLE_H_
#define EQPARSE_CLI_BUNDLE_H_

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eqparse/eval/evaluate.h"
#include "eqparse/learning/linear_model.h"
#include "eqparse/learning/trainer.h"
#include "eqparse/quantity/quantity.h"
#include "eqparse/tree/lexicon.h"
#include "eqparse/tree/tree_parser.h"

namespace eqparse {

struct BundleConfig {
  LearnerConfig learner;
  TreeParserOptions tree;
  int relevance_window = 3;
  int variable_window = 2;

  std::map<std::string, std::string> describe() const;
  // Throws DataError on an unknown key or bad value.
  static BundleConfig from_map(const std::map<std::string, std::string>& kv);
};

// The three stage models plus everything needed to run them again.
struct ModelBundle {
  BundleConfig config;
  LexiconRules rules = LexiconRules::builtin();
  NumberWordLexicon numbers = NumberWordLexicon::builtin();
  LinearModel relevance;
  LinearModel variables;
  LinearModel tree;

  TreeParser parser() const { return TreeParser(config.tree, rules); }

  // Text format:
  //   eqparse-bundle 1
  //   config key=value ...
  //   section <name> <line count>      (lexicon, number_words, relevance,
  //   <lines>                           variables, tree)
  void write(std::ostream& out) const;
  static ModelBundle read(std::istream& in);
  static ModelBundle read_file(const std::string& path);
};

struct TrainReport {
  int examples = 0;
  int relevance_examples = 0;
  int variable_examples = 0;
  int tree_examples = 0;
  SupersetTrace variable_trace;
};

// Relevance and variables train on gold stage outputs, the tree on gold
// trigger lists. Examples without a usable gold for a stage are left out of
// that stage. Throws DataError for fewer than two examples.
ModelBundle train_bundle(const std::vector<AnnotatedExample>& corpus,
                         const BundleConfig& config,
                         const LexiconRules& rules = LexiconRules::builtin(),
                         const NumberWordLexicon& numbers =
                             NumberWordLexicon::builtin(),
                         TrainReport* report = nullptr);

class BundlePredictor : public Predictor {
 public:
  explicit BundlePredictor(ModelBundle bundle);

  RelevanceAssignment relevance(
      const Sentence& sentence,
      const std::vector<QuantityTrigger>& quantities) const override;
  VariableCandidate variables(const Sentence& sentence) const override;
  EquationTree tree(const Sentence& sentence,
                    const TriggerList& triggers) const override;
  const TreeParser& parser() const override { return parser_; }
  const NumberWordLexicon& numbers() const override { return bundle_.numbers; }

  const ModelBundle& bundle() const { return bundle_; }

 private:
  ModelBundle bundle_;
  TreeParser parser_;
};

}  // namespace eqparse

#endif  // EQPARSE_CLI_BUNDLE_H_
