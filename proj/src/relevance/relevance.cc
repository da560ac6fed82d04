#include "eqparse/relevance/relevance.h"

#include <string>

#include "eqparse/error.h"

namespace eqparse {
namespace {

const std::string kAnd = "∧";

void add_quantity_features(const Sentence& sentence, const QuantityTrigger& q,
                           bool only_number, bool relevant, int window,
                           SparseVector& phi) {
  const std::string rel = kAnd + (relevant ? "rel=true" : "rel=false");
  auto [first, last] = sentence.token_range(q.span);
  if (last <= first) last = first + 1;  // annotation between tokens

  phi.add("qbias" + rel);

  // Neighbourhood: a window of tokens around the mention.
  std::string prev;
  for (int i = first - window; i < last + window; ++i) {
    std::string w = sentence.word(i);
    bool inside = i >= first && i < last;
    if (!inside) {
      phi.add("nb_uni=" + w + rel);
      int offset = i < first ? i - first : i - last + 1;
      phi.add("nb_pos[" + std::to_string(offset) + "]=" + sentence.pos_tag(i) +
              rel);
    }
    if (i > first - window) phi.add("nb_bi=" + prev + "_" + w + rel);
    prev = std::move(w);
  }

  // The quantity phrase itself.
  std::string phrase_prev;
  for (int i = first; i < last; ++i) {
    std::string w = sentence.word(i);
    phi.add("qword=" + w + rel);
    phi.add("qpos=" + sentence.pos_tag(i) + rel);
    if (i > first) phi.add("qbi=" + phrase_prev + "_" + w + rel);
    phrase_prev = std::move(w);
  }
  if (first < static_cast<int>(sentence.tokens.size())) {
    const Token& tok = sentence.tokens[first];
    if (tok.span.end > q.span.end && q.span.start >= tok.span.start) {
      std::string rest = to_lower(std::string_view(tok.text).substr(
          q.span.end - tok.span.start));
      phi.add("qtoken_rest=" + rest + rel);
    }
  }
  bool one_or_two = q.value == Rational(1) || q.value == Rational(2);
  phi.add(std::string("q_one_or_two=") + (one_or_two ? "true" : "false") + rel);
  phi.add(std::string("only_number=") + (only_number ? "true" : "false") + rel);
}

}  // namespace

SparseVector relevance_features(const Sentence& sentence,
                                std::span<const QuantityTrigger> quantities,
                                const RelevanceAssignment& assignment,
                                int window) {
  if (assignment.size() != quantities.size()) {
    throw InvalidArgument("relevance assignment not aligned with quantities");
  }
  SparseVector phi;
  std::size_t relevant = 0;
  for (std::size_t i = 0; i < quantities.size(); ++i) {
    add_quantity_features(sentence, quantities[i], quantities.size() == 1,
                          assignment[i], window, phi);
    if (assignment[i]) ++relevant;
  }
  phi.add("relcount=" + std::to_string(relevant) + "-of-" +
          std::to_string(quantities.size()));
  return phi;
}

std::vector<RelevanceAssignment> enumerate_relevance(std::size_t k) {
  if (k > kMaxJointQuantities) {
    throw InvalidArgument("joint relevance supports at most " +
                          std::to_string(kMaxJointQuantities) +
                          " quantities, got " + std::to_string(k));
  }
  std::vector<RelevanceAssignment> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
    RelevanceAssignment a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = !((m >> (k - 1 - i)) & 1);
    out.push_back(std::move(a));
  }
  return out;
}

StructuredProblem<RelevanceInput, RelevanceAssignment> relevance_problem(
    int window) {
  StructuredProblem<RelevanceInput, RelevanceAssignment> p;
  p.candidates = [](const RelevanceInput& x) {
    return enumerate_relevance(x.quantities.size());
  };
  p.features = [window](const RelevanceInput& x, const RelevanceAssignment& y) {
    return relevance_features(x.sentence, x.quantities, y, window);
  };
  p.cost = [](const RelevanceAssignment& gold, const RelevanceAssignment& y) {
    double c = 0.0;
    for (std::size_t i = 0; i < gold.size() && i < y.size(); ++i) {
      if (gold[i] != y[i]) c += 1.0;
    }
    return c;
  };
  p.contains = [](const RelevanceInput& x, const RelevanceAssignment& y) {
    return y.size() == x.quantities.size() &&
           x.quantities.size() <= kMaxJointQuantities;
  };
  return p;
}

RelevanceAssignment predict_relevance(const LinearModel& model,
                                      const Sentence& sentence,
                                      std::span<const QuantityTrigger> quantities,
                                      int window) {
  RelevanceInput input{sentence, {quantities.begin(), quantities.end()}};
  return predict(model, input, relevance_problem(window));
}

}  // namespace eqparse
