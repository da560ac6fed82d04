#ifndef EQPARSE_EVAL_GOLD_H_
#define EQPARSE_EVAL_GOLD_H_

#include <optional>
#include <vector>

#include "eqparse/core/equation_tree.h"
#include "eqparse/core/expression.h"
#include "eqparse/eval/corpus.h"
#include "eqparse/quantity/quantity.h"
#include "eqparse/relevance/relevance.h"
#include "eqparse/tree/tree_parser.h"
#include "eqparse/variables/variables.h"

namespace eqparse {

// A tree over `triggers` (in order) whose expression is `equation`, or none.
// SUB/DIV children may appear in either text order (the order flag absorbs
// it); ADD/MUL/EQ operands may appear on either side. The first match in
// split order wins.
std::optional<EquationTree> match_projective_tree(const Expression& equation,
                                                  const TriggerList& triggers);

// Per-stage gold outputs recovered from an example's equation and groundings.
struct GoldStages {
  std::vector<QuantityTrigger> quantities;
  // Which quantities the equation's constants use; none when some constant
  // has no matching quantity.
  std::optional<RelevanceAssignment> relevance;
  // Candidates whose labelled triggers fit the equation and a grounding.
  std::vector<VariableCandidate> variable_set;
  // The preferred full trigger list and its tree, when one is projective.
  std::optional<TriggerList> triggers;
  std::optional<EquationTree> tree;
  // The tree also honours the parser's lexicon.
  bool tree_admissible = false;
};

// Tries every value-preserving assignment of constants to quantities and
// every member of variable_set, preferring a tree the parser admits.
GoldStages derive_gold(const AnnotatedExample& example,
                       const TreeParser& parser,
                       const NumberWordLexicon& numbers =
                           NumberWordLexicon::builtin());

}  // namespace eqparse

#endif  // EQPARSE_EVAL_GOLD_H_
