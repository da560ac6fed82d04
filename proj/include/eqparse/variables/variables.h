#ifndef EQPARSE_VARIABLES_VARIABLES_H_
#define EQPARSE_VARIABLES_VARIABLES_H_

#include <string_view>
#include <vector>

#include "eqparse/core/trigger.h"
#include "eqparse/learning/linear_model.h"
#include "eqparse/learning/trainer.h"
#include "eqparse/text/sentence.h"

namespace eqparse {

// One noun phrase, or a pair of noun phrases in text order. A pair may repeat
// the same phrase ("two numbers" grounding both variables).
struct VariableCandidate {
  std::vector<Span> nps;

  bool two_variables() const { return nps.size() == 2; }
  bool same_np() const { return nps.size() == 2 && nps[0] == nps[1]; }

  friend bool operator==(const VariableCandidate&,
                         const VariableCandidate&) = default;
};

enum class Coreference { kSameLabel, kDifferentLabels };

// Rule-based variable coreference between an earlier and a later noun phrase
// (or the same phrase twice):
//   1. identical text without the token "two" or "2" -> same label;
//   2. different phrases where the later one contains "itself" or
//      "the same number" -> same label;
//   3. otherwise different labels.
Coreference coreference_label(std::string_view earlier_np,
                              std::string_view later_np);

// NP chunks sorted by position, without duplicates.
std::vector<Span> sorted_noun_phrases(const Sentence& sentence);

// Singles by position, then pairs (i <= j) lexicographically by position.
// Self-pairs are kept only when coreference gives them two labels; any other
// self-pair would collapse onto the single-phrase candidate.
// Throws InvalidArgument when the sentence has no NP chunks.
std::vector<VariableCandidate> enumerate_variable_candidates(
    const Sentence& sentence);

// Unigrams, bigrams, POS tags and head word of each phrase plus unigrams and
// POS tags of neighbouring tokens, all conjoined with (two_variables,
// same_np), e.g. "np_unigram=number∧two=false∧same=false".
SparseVector variable_features(const Sentence& sentence,
                               const VariableCandidate& candidate,
                               int window = 2);

// Variable triggers for a candidate. A single phrase gives [V1]. A self-pair
// gives [V1, V2]. Other pairs give [V1, V1] when coreferent and [V1, V2]
// otherwise, with V1 on the earlier phrase.
std::vector<VariableTrigger> assign_labels(const Sentence& sentence,
                                           const VariableCandidate& candidate);

StructuredProblem<Sentence, VariableCandidate> variable_problem(int window = 2);

std::vector<VariableTrigger> predict_variable_triggers(const LinearModel& model,
                                                       const Sentence& sentence,
                                                       int window = 2);

}  // namespace eqparse

#endif  // EQPARSE_VARIABLES_VARIABLES_H_
