#include "eqparse/eval/evaluate.h"

#include <numeric>
#include <random>

#include "eqparse/error.h"
#include "eqparse/learning/trainer.h"

namespace eqparse {
namespace {

using nlohmann::json;

struct Ratio {
  int hits = 0;
  int total = 0;
  void add(bool hit) {
    ++total;
    if (hit) ++hits;
  }
  double value() const { return total == 0 ? 1.0 : double(hits) / total; }
};

}  // namespace

ParseResult run_pipeline(const Predictor& predictor, const Sentence& sentence) {
  ParseResult r;
  r.quantities = sentence_quantities(sentence, predictor.numbers());
  r.relevance = predictor.relevance(sentence, r.quantities);
  for (std::size_t q = 0; q < r.quantities.size(); ++q) {
    if (r.relevance[q]) r.triggers.emplace_back(r.quantities[q]);
  }
  r.candidate = predictor.variables(sentence);
  r.variables = assign_labels(sentence, r.candidate);
  for (const VariableTrigger& v : r.variables) r.triggers.emplace_back(v);
  sort_triggers(r.triggers);
  if (r.triggers.size() >= 2) {
    r.tree = predictor.tree(sentence, r.triggers);
    r.equation = expr(*r.tree);
  }
  return r;
}

json parse_result_to_json(const Sentence& sentence, const ParseResult& r) {
  json out;
  out["equation"] = r.equation ? json(to_prefix(*r.equation)) : json(nullptr);
  json groundings = json::array();
  for (const VariableTrigger& v : r.variables) {
    groundings.push_back({{"label", std::string(label_name(v.label))},
                          {"text", std::string(sentence.slice(v.span))},
                          {"span", span_to_json(v.span)}});
  }
  out["groundings"] = groundings;

  json debug;
  json quantities = json::array();
  for (std::size_t q = 0; q < r.quantities.size(); ++q) {
    quantities.push_back(
        {{"value", format_rational(r.quantities[q].value)},
         {"text", std::string(sentence.slice(r.quantities[q].span))},
         {"span", span_to_json(r.quantities[q].span)},
         {"relevant", bool(r.relevance[q])}});
  }
  debug["quantities"] = quantities;
  json nps = json::array();
  for (const Span& s : r.candidate.nps) nps.push_back(span_to_json(s));
  debug["variable_candidate"] = nps;
  json triggers = json::array();
  for (const Trigger& t : r.triggers) triggers.push_back(to_string(t));
  debug["triggers"] = triggers;
  debug["tree"] = r.tree ? json(to_prefix(*r.tree)) : json(nullptr);
  out["debug"] = debug;
  return out;
}

json Metrics::to_json() const {
  return {{"examples", examples},
          {"equation_accuracy", equation_accuracy},
          {"equation_grounding_accuracy", equation_grounding_accuracy},
          {"relevance_accuracy", relevance_accuracy},
          {"variable_accuracy", variable_accuracy},
          {"tree_accuracy", tree_accuracy},
          {"tree_accuracy_predicted", tree_accuracy_predicted}};
}

Metrics evaluate(const Predictor& predictor,
                 const std::vector<AnnotatedExample>& examples) {
  if (examples.empty()) throw InvalidArgument("no examples to evaluate");
  Ratio equation, grounded, relevance, variables, tree, tree_predicted;
  for (const AnnotatedExample& ex : examples) {
    GoldStages gold = derive_gold(ex, predictor.parser(), predictor.numbers());
    ParseResult r = run_pipeline(predictor, ex.sentence);

    bool eq_ok = r.equation && equations_equal(*r.equation, ex.equation);
    bool gr_ok = r.equation &&
                 equations_equal(*r.equation, ex.equation,
                                 EquivalenceMode::kWithGrounding, r.variables,
                                 ex.groundings);
    equation.add(eq_ok);
    grounded.add(gr_ok);

    if (gold.relevance) relevance.add(r.relevance == *gold.relevance);
    if (!gold.variable_set.empty()) {
      variables.add(std::find(gold.variable_set.begin(),
                              gold.variable_set.end(),
                              r.candidate) != gold.variable_set.end());
    }
    if (gold.triggers) {
      EquationTree t = predictor.tree(ex.sentence, *gold.triggers);
      tree.add(equations_equal(expr(t), ex.equation));
      tree_predicted.add(eq_ok);
    }
  }
  Metrics m;
  m.examples = static_cast<int>(examples.size());
  m.equation_accuracy = equation.value();
  m.equation_grounding_accuracy = grounded.value();
  m.relevance_accuracy = relevance.value();
  m.variable_accuracy = variables.value();
  m.tree_accuracy = tree.value();
  m.tree_accuracy_predicted = tree_predicted.value();
  return m;
}

std::vector<std::vector<std::size_t>> fold_partition(std::size_t n, int k,
                                                     std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("need at least 2 folds");
  if (n < static_cast<std::size_t>(k)) {
    throw InvalidArgument("corpus of " + std::to_string(n) +
                          " examples is smaller than " + std::to_string(k) +
                          " folds");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  learning_internal::shuffle(order, rng);
  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t base = n / k, extra = n % k, pos = 0;
  for (int f = 0; f < k; ++f) {
    std::size_t size = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
    folds[f].assign(order.begin() + pos, order.begin() + pos + size);
    pos += size;
  }
  return folds;
}

CrossValidation cross_validate(const std::vector<AnnotatedExample>& corpus,
                               int k, std::uint64_t seed,
                               const TrainFn& train) {
  auto folds = fold_partition(corpus.size(), k, seed);
  CrossValidation cv;
  for (int f = 0; f < k; ++f) {
    std::vector<AnnotatedExample> train_set, test_set;
    for (int g = 0; g < k; ++g) {
      for (std::size_t idx : folds[g]) {
        (g == f ? test_set : train_set).push_back(corpus[idx]);
      }
    }
    std::unique_ptr<Predictor> predictor = train(train_set);
    cv.folds.push_back(evaluate(*predictor, test_set));
  }
  Metrics& m = cv.mean;
  for (const Metrics& fm : cv.folds) {
    m.examples += fm.examples;
    m.equation_accuracy += fm.equation_accuracy / k;
    m.equation_grounding_accuracy += fm.equation_grounding_accuracy / k;
    m.relevance_accuracy += fm.relevance_accuracy / k;
    m.variable_accuracy += fm.variable_accuracy / k;
    m.tree_accuracy += fm.tree_accuracy / k;
    m.tree_accuracy_predicted += fm.tree_accuracy_predicted / k;
  }
  return cv;
}

}  // namespace eqparse
