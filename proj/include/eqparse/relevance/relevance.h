#ifndef EQPARSE_RELEVANCE_RELEVANCE_H_
#define EQPARSE_RELEVANCE_RELEVANCE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "eqparse/core/trigger.h"
#include "eqparse/learning/linear_model.h"
#include "eqparse/learning/trainer.h"
#include "eqparse/text/sentence.h"

namespace eqparse {

// Relevance(q) for each detected quantity, aligned with the quantity list.
using RelevanceAssignment = std::vector<bool>;

struct RelevanceInput {
  Sentence sentence;
  std::vector<QuantityTrigger> quantities;
};

// Joint inference enumerates all 2^k assignments.
inline constexpr std::size_t kMaxJointQuantities = 16;

// phi(x, y) for the joint relevance task. Per quantity: window unigrams and
// bigrams, neighbour POS tags by offset, the quantity phrase, whether the
// value is 1 or 2 and whether it is the only number; each conjoined with that
// quantity's relevance bit. One global feature couples the decisions: the
// number of relevant quantities out of the total ("relcount=2-of-3").
SparseVector relevance_features(const Sentence& sentence,
                                std::span<const QuantityTrigger> quantities,
                                const RelevanceAssignment& assignment,
                                int window = 3);

// All 2^k assignments in binary order, all-true first and all-false last.
// Throws InvalidArgument when k > kMaxJointQuantities.
std::vector<RelevanceAssignment> enumerate_relevance(std::size_t k);

StructuredProblem<RelevanceInput, RelevanceAssignment> relevance_problem(
    int window = 3);

// Exact joint argmax over all assignments; ties go to the earlier assignment
// in enumerate_relevance order.
RelevanceAssignment predict_relevance(const LinearModel& model,
                                      const Sentence& sentence,
                                      std::span<const QuantityTrigger> quantities,
                                      int window = 3);

}  // namespace eqparse

#endif  // EQPARSE_RELEVANCE_RELEVANCE_H_
