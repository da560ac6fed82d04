#ifndef EQPARSE_EVAL_EQUIVALENCE_H_
#define EQPARSE_EVAL_EQUIVALENCE_H_

#include <vector>

#include "eqparse/core/expression.h"
#include "eqparse/core/trigger.h"

namespace eqparse {

// One valid assignment of variable labels to noun phrases. A label may list
// several mentions ("a number", "the same number").
using Grounding = std::vector<VariableTrigger>;

// Sorts ADD/MUL operands recursively, folds an operation whose operands are
// both constants (division by zero is left alone), and puts the smaller EQ
// side first. Idempotent.
Expression canonicalize(const Expression& expression);

enum class EquivalenceMode { kEquationOnly, kWithGrounding };

// True iff `predicted` grounds every label that `gold` grounds and nothing
// else, and each predicted (label, span) pair is listed in `gold`.
bool grounding_matches(const Grounding& predicted, const Grounding& gold);

Grounding swap_labels(const Grounding& grounding);

// Equal canonical forms under the identity or the V1 <-> V2 swap. With
// kWithGrounding the predicted grounding, relabelled by the same swap, must
// also match a member of `gold_groundings`.
bool equations_equal(const Expression& predicted, const Expression& gold,
                     EquivalenceMode mode = EquivalenceMode::kEquationOnly,
                     const Grounding& predicted_grounding = {},
                     const std::vector<Grounding>& gold_groundings = {});

}  // namespace eqparse

#endif  // EQPARSE_EVAL_EQUIVALENCE_H_
