#ifndef EQPARSE_TREE_TREE_PARSER_H_
#define EQPARSE_TREE_TREE_PARSER_H_

#include <optional>
#include <vector>

#include "eqparse/core/equation_tree.h"
#include "eqparse/core/trigger.h"
#include "eqparse/learning/linear_model.h"
#include "eqparse/learning/trainer.h"
#include "eqparse/text/sentence.h"
#include "eqparse/tree/lexicon.h"

namespace eqparse {

struct TreeInput {
  Sentence sentence;
  TriggerList triggers;  // sorted
};

// An internal node over leaves [i, j) split at k.
struct NodeKey {
  int i = 0;
  int k = 0;
  int j = 0;
  Op op = Op::kAdd;
  Order order = Order::kLR;
  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

// (op, order) pairs a non-root node may take, in tie-break order.
const std::vector<std::pair<Op, Order>>& node_labels();

// Character extent [first start, max end) of the triggers in [i, j).
Span leaf_extent(const TriggerList& triggers, int i, int j);

// Context windows of the node joining [i, k) and [k, j). MidSpan runs from
// the end of the earlier child's extent to the start of the later one (empty
// when they touch or overlap). LeftSpan runs from the end of trigger i-1 (or
// the sentence start) to the node start; RightSpan from the node end to the
// start of trigger j (or the sentence end). left_token is the text of
// trigger i when the left child is a single leaf.
NodeContext node_context(const Sentence& sentence, const TriggerList& triggers,
                         int i, int k, int j);

// Internal nodes in pre-order. Requires the leaves of `tree` to be exactly
// `n` triggers in list order; leaf indices are positions, not spans.
std::vector<NodeKey> tree_nodes(const EquationTree& tree);

struct TreeParserOptions {
  bool use_lexicon = true;
  // Rules add "lex=<id>" features instead of restricting labels.
  bool lexicon_as_features = false;
  // Nodes may not cross constituents (or NP chunks when none are given).
  bool conform_syntactic = false;
  int window = 2;
};

class TreeParser {
 public:
  explicit TreeParser(TreeParserOptions options = {},
                      LexiconRules rules = LexiconRules::builtin());

  const TreeParserOptions& options() const { return options_; }
  const LexiconRules& rules() const { return rules_; }

  // The forced label of a non-root node, or none. Always none when the
  // lexicon is off or used only as features.
  std::optional<LexiconMatch> constraint(const TreeInput& input, int i, int k,
                                         int j) const;

  // Neighbourhood features at the four child boundaries, connecting-text
  // features from MidSpan, a number comparison when both children are
  // quantity leaves, child kinds and a bias, all conjoined with op and order
  // ("mid_bi=less_than∧op=SUB∧ord=RL").
  SparseVector node_features(const TreeInput& input, int i, int k, int j,
                             Op op, Order order) const;

  // Sum of node_features over every internal node, root included.
  SparseVector tree_features(const TreeInput& input,
                             const EquationTree& tree) const;

  // True iff the tree's leaves are the input triggers in order and every
  // non-root node honours the lexicon.
  bool admissible(const TreeInput& input, const EquationTree& tree) const;

  // Exact CKY argmax. With `gold`, every non-root node absent from the gold
  // tree adds `cost_scale`. Ties prefer the smaller split, then the earlier
  // label in node_labels(). Throws InvalidArgument for fewer than 2 triggers.
  EquationTree decode(const SparseVector& weights, const TreeInput& input,
                      const EquationTree* gold = nullptr,
                      double cost_scale = 0.0) const;

  // Number of non-root nodes of `guess` absent from `gold`.
  static double cost(const EquationTree& gold, const EquationTree& guess);

  StructuredProblem<TreeInput, EquationTree> problem() const;

 private:
  bool crosses_syntax(const TreeInput& input, int i, int j) const;
  std::optional<EquationTree> run_chart(const SparseVector& weights,
                                        const TreeInput& input,
                                        const std::vector<NodeKey>* gold,
                                        double cost_scale,
                                        bool conform) const;

  TreeParserOptions options_;
  LexiconRules rules_;
};

EquationTree cky_decode(const LinearModel& model, const TreeParser& parser,
                        const Sentence& sentence, const TriggerList& triggers);

}  // namespace eqparse

#endif  // EQPARSE_TREE_TREE_PARSER_H_
