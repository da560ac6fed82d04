#ifndef EQPARSE_EVAL_EVALUATE_H_
#define EQPARSE_EVAL_EVALUATE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqparse/core/equation_tree.h"
#include "eqparse/eval/corpus.h"
#include "eqparse/eval/gold.h"
#include "eqparse/quantity/quantity.h"
#include "eqparse/relevance/relevance.h"
#include "eqparse/variables/variables.h"

namespace eqparse {

// The three pipeline stages.
class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual RelevanceAssignment relevance(
      const Sentence& sentence,
      const std::vector<QuantityTrigger>& quantities) const = 0;
  virtual VariableCandidate variables(const Sentence& sentence) const = 0;
  virtual EquationTree tree(const Sentence& sentence,
                            const TriggerList& triggers) const = 0;
  // Parser used to derive gold trees (its lexicon decides admissibility).
  virtual const TreeParser& parser() const = 0;
  virtual const NumberWordLexicon& numbers() const {
    return NumberWordLexicon::builtin();
  }
};

struct ParseResult {
  std::vector<QuantityTrigger> quantities;
  RelevanceAssignment relevance;
  VariableCandidate candidate;
  std::vector<VariableTrigger> variables;
  TriggerList triggers;
  std::optional<EquationTree> tree;
  // Empty when fewer than two triggers remain.
  std::optional<Expression> equation;
};

ParseResult run_pipeline(const Predictor& predictor, const Sentence& sentence);

nlohmann::json parse_result_to_json(const Sentence& sentence,
                                    const ParseResult& result);

struct Metrics {
  int examples = 0;
  double equation_accuracy = 0.0;
  double equation_grounding_accuracy = 0.0;
  // Stage accuracies over the examples whose gold for that stage exists; a
  // stage with no such example scores 1.
  double relevance_accuracy = 0.0;
  double variable_accuracy = 0.0;
  // Tree decoded over the gold trigger list.
  double tree_accuracy = 0.0;
  // Full pipeline equation, on examples with a gold trigger list.
  double tree_accuracy_predicted = 0.0;

  nlohmann::json to_json() const;
};

// Throws InvalidArgument on an empty example list.
Metrics evaluate(const Predictor& predictor,
                 const std::vector<AnnotatedExample>& examples);

// Indices of each fold after a seeded shuffle; folds are contiguous blocks
// whose sizes differ by at most one. Throws InvalidArgument unless
// 2 <= k <= n.
std::vector<std::vector<std::size_t>> fold_partition(std::size_t n, int k,
                                                     std::uint64_t seed);

using TrainFn = std::function<std::unique_ptr<Predictor>(
    const std::vector<AnnotatedExample>&)>;

struct CrossValidation {
  Metrics mean;
  std::vector<Metrics> folds;
};

// Trains on k-1 folds and evaluates on the held-out one; the mean averages
// every accuracy and sums the example counts.
CrossValidation cross_validate(const std::vector<AnnotatedExample>& corpus,
                               int k, std::uint64_t seed,
                               const TrainFn& train);

}  // namespace eqparse

#endif  // EQPARSE_EVAL_EVALUATE_H_
