#include "eqparse/eval/gold.h"

#include <algorithm>
#include <functional>

namespace eqparse {
namespace {

int leaf_count(const Expression& e) {
  if (e.kind() != Expression::Kind::kCompound) return 1;
  int n = 0;
  for (const Expression& operand : e.operands()) n += leaf_count(operand);
  return n;
}

NodePtr match(const Expression& e, const TriggerList& t, int i, int j) {
  if (leaf_count(e) != j - i) return nullptr;
  switch (e.kind()) {
    case Expression::Kind::kConstant:
      if (t[i].is_quantity() && t[i].as_quantity().value == e.value()) {
        return Node::leaf(t[i]);
      }
      return nullptr;
    case Expression::Kind::kVariable:
      if (t[i].is_variable() && t[i].as_variable().label == e.label()) {
        return Node::leaf(t[i]);
      }
      return nullptr;
    case Expression::Kind::kCompound:
      break;
  }
  const Expression& a = e.operands()[0];
  const Expression& b = e.operands()[1];
  for (int k = i + 1; k < j; ++k) {
    // Operand a on the left first; for SUB/DIV that is the LR reading.
    if (NodePtr l = match(a, t, i, k)) {
      if (NodePtr r = match(b, t, k, j)) {
        return Node::internal(e.op(), Order::kLR, l, r);
      }
    }
    if (NodePtr l = match(b, t, i, k)) {
      if (NodePtr r = match(a, t, k, j)) {
        return Node::internal(e.op(), Order::kRL, l, r);
      }
    }
  }
  return nullptr;
}

std::vector<VarLabel> sorted_labels(std::vector<VarLabel> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<VarLabel> trigger_labels(const std::vector<VariableTrigger>& vs) {
  std::vector<VarLabel> out;
  for (const VariableTrigger& v : vs) out.push_back(v.label);
  return sorted_labels(out);
}

bool fits(const std::vector<VariableTrigger>& vs,
          const std::vector<VarLabel>& equation_labels,
          const std::vector<Grounding>& groundings) {
  auto any_member = [&](const Grounding& g) {
    return std::any_of(groundings.begin(), groundings.end(),
                       [&](const Grounding& m) {
                         return grounding_matches(g, m);
                       });
  };
  if (trigger_labels(vs) == equation_labels && any_member(vs)) return true;
  Grounding swapped = swap_labels(vs);
  return trigger_labels(swapped) == equation_labels && any_member(swapped);
}

}  // namespace

std::optional<EquationTree> match_projective_tree(const Expression& equation,
                                                  const TriggerList& triggers) {
  const int n = static_cast<int>(triggers.size());
  if (n < 2) return std::nullopt;
  if (NodePtr root = match(equation, triggers, 0, n)) return EquationTree(root);
  if (NodePtr root = match(swap_labels(equation), triggers, 0, n)) {
    return EquationTree(root);
  }
  return std::nullopt;
}

GoldStages derive_gold(const AnnotatedExample& example,
                       const TreeParser& parser,
                       const NumberWordLexicon& numbers) {
  const Sentence& sentence = example.sentence;
  GoldStages gold;
  gold.quantities = sentence_quantities(sentence, numbers);

  // Value-preserving injections of constants into quantities.
  std::vector<Rational> constants = constant_values(example.equation);
  std::vector<RelevanceAssignment> assignments;
  RelevanceAssignment used(gold.quantities.size(), false);
  std::function<void(std::size_t)> assign = [&](std::size_t c) {
    if (c == constants.size()) {
      if (std::find(assignments.begin(), assignments.end(), used) ==
          assignments.end()) {
        assignments.push_back(used);
      }
      return;
    }
    for (std::size_t q = 0; q < gold.quantities.size(); ++q) {
      if (used[q] || gold.quantities[q].value != constants[c]) continue;
      used[q] = true;
      assign(c + 1);
      used[q] = false;
    }
  };
  assign(0);

  std::vector<VarLabel> labels =
      sorted_labels(variable_labels(example.equation));
  if (!labels.empty() && labels.size() <= 2 && !sentence.np_chunks.empty()) {
    for (const VariableCandidate& c : enumerate_variable_candidates(sentence)) {
      if (fits(assign_labels(sentence, c), labels, example.groundings)) {
        gold.variable_set.push_back(c);
      }
    }
  }

  if (assignments.empty()) return gold;
  gold.relevance = assignments.front();
  std::vector<VariableCandidate> variable_options = gold.variable_set;
  if (labels.empty()) variable_options.push_back({});

  for (const RelevanceAssignment& r : assignments) {
    for (const VariableCandidate& c : variable_options) {
      TriggerList triggers;
      for (std::size_t q = 0; q < r.size(); ++q) {
        if (r[q]) triggers.emplace_back(gold.quantities[q]);
      }
      if (!c.nps.empty()) {
        for (const VariableTrigger& v : assign_labels(sentence, c)) {
          triggers.emplace_back(v);
        }
      }
      sort_triggers(triggers);
      auto tree = match_projective_tree(example.equation, triggers);
      if (!tree) continue;
      bool admissible = parser.admissible(TreeInput{sentence, triggers}, *tree);
      if (!gold.tree || (admissible && !gold.tree_admissible)) {
        gold.relevance = r;
        gold.triggers = triggers;
        gold.tree = tree;
        gold.tree_admissible = admissible;
      }
      if (admissible) return gold;
    }
  }
  return gold;
}

}  // namespace eqparse
