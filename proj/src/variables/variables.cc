#include "eqparse/variables/variables.h"

#include <algorithm>
#include <string>

#include "eqparse/error.h"

namespace eqparse {
namespace {

const std::string kAnd = "∧";

std::string flag_suffix(const VariableCandidate& c) {
  return kAnd + "two=" + (c.two_variables() ? "true" : "false") + kAnd +
         "same=" + (c.same_np() ? "true" : "false");
}

void add_np_features(const Sentence& sentence, const Span& np, int window,
                     const std::string& suffix, SparseVector& phi) {
  auto [first, last] = sentence.token_range(np);
  std::string prev;
  for (int i = first; i < last; ++i) {
    std::string w = sentence.word(i);
    phi.add("np_unigram=" + w + suffix);
    phi.add("np_pos=" + sentence.pos_tag(i) + suffix);
    if (i > first) phi.add("np_bigram=" + prev + "_" + w + suffix);
    prev = std::move(w);
  }
  if (last > first) phi.add("np_head=" + sentence.word(last - 1) + suffix);
  for (int d = 1; d <= window; ++d) {
    phi.add("np_left_uni=" + sentence.word(first - d) + suffix);
    phi.add("np_left_pos=" + sentence.pos_tag(first - d) + suffix);
    phi.add("np_right_uni=" + sentence.word(last - 1 + d) + suffix);
    phi.add("np_right_pos=" + sentence.pos_tag(last - 1 + d) + suffix);
  }
}

bool has_two(const std::string& normalized) {
  return contains_phrase(normalized, "two") || contains_phrase(normalized, "2");
}

}  // namespace

Coreference coreference_label(std::string_view earlier_np,
                              std::string_view later_np) {
  std::string a = normalize_for_match(earlier_np);
  std::string b = normalize_for_match(later_np);
  if (a == b) {
    return has_two(a) ? Coreference::kDifferentLabels : Coreference::kSameLabel;
  }
  if (contains_phrase(b, "itself") || contains_phrase(b, "the same number")) {
    return Coreference::kSameLabel;
  }
  return Coreference::kDifferentLabels;
}

std::vector<Span> sorted_noun_phrases(const Sentence& sentence) {
  std::vector<Span> nps = sentence.np_chunks;
  std::sort(nps.begin(), nps.end());
  nps.erase(std::unique(nps.begin(), nps.end()), nps.end());
  return nps;
}

std::vector<VariableCandidate> enumerate_variable_candidates(
    const Sentence& sentence) {
  std::vector<Span> nps = sorted_noun_phrases(sentence);
  if (nps.empty()) throw InvalidArgument("sentence has no NP chunks");
  std::vector<VariableCandidate> out;
  for (const Span& np : nps) out.push_back({{np}});
  for (std::size_t i = 0; i < nps.size(); ++i) {
    std::string_view text = sentence.slice(nps[i]);
    if (coreference_label(text, text) == Coreference::kDifferentLabels) {
      out.push_back({{nps[i], nps[i]}});
    }
    for (std::size_t j = i + 1; j < nps.size(); ++j) {
      out.push_back({{nps[i], nps[j]}});
    }
  }
  return out;
}

SparseVector variable_features(const Sentence& sentence,
                               const VariableCandidate& candidate,
                               int window) {
  const std::string suffix = flag_suffix(candidate);
  SparseVector phi;
  phi.add("var_bias" + suffix);
  for (const Span& np : candidate.nps) {
    add_np_features(sentence, np, window, suffix, phi);
  }
  return phi;
}

std::vector<VariableTrigger> assign_labels(const Sentence& sentence,
                                           const VariableCandidate& candidate) {
  if (candidate.nps.empty() || candidate.nps.size() > 2) {
    throw InvalidArgument("variable candidate needs one or two phrases");
  }
  if (candidate.nps.size() == 1) return {{VarLabel::kV1, candidate.nps[0]}};
  const Span& a = candidate.nps[0];
  const Span& b = candidate.nps[1];
  if (candidate.same_np()) return {{VarLabel::kV1, a}, {VarLabel::kV2, b}};
  Coreference coref = coreference_label(sentence.slice(a), sentence.slice(b));
  VarLabel second =
      coref == Coreference::kSameLabel ? VarLabel::kV1 : VarLabel::kV2;
  return {{VarLabel::kV1, a}, {second, b}};
}

StructuredProblem<Sentence, VariableCandidate> variable_problem(int window) {
  StructuredProblem<Sentence, VariableCandidate> p;
  p.candidates = [](const Sentence& s) {
    return enumerate_variable_candidates(s);
  };
  p.features = [window](const Sentence& s, const VariableCandidate& c) {
    return variable_features(s, c, window);
  };
  // One component per variable slot.
  p.cost = [](const VariableCandidate& gold, const VariableCandidate& guess) {
    double c = 0.0;
    for (std::size_t slot = 0; slot < 2; ++slot) {
      bool in_gold = slot < gold.nps.size();
      bool in_guess = slot < guess.nps.size();
      if (in_gold != in_guess ||
          (in_gold && gold.nps[slot] != guess.nps[slot])) {
        c += 1.0;
      }
    }
    return c;
  };
  return p;
}

std::vector<VariableTrigger> predict_variable_triggers(const LinearModel& model,
                                                       const Sentence& sentence,
                                                       int window) {
  return assign_labels(sentence,
                       predict(model, sentence, variable_problem(window)));
}

}  // namespace eqparse
