#ifndef EQPARSE_LEARNING_TRAINER_H_
#define EQPARSE_LEARNING_TRAINER_H_

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eqparse/error.h"
#include "eqparse/learning/linear_model.h"
#include "eqparse/learning/sparse_vector.h"

namespace eqparse {

// Everything the learner needs to know about one structured prediction task.
//
// `features` is required. The output space is given either by `candidates`
// (an enumeration whose order fixes the tie-break) or by `decoder`, an exact
// argmax that adds margin_cost * Hamming cost against `gold` when gold is
// non-null. When both are set, `decoder` wins.
template <typename Input, typename Output>
struct StructuredProblem {
  std::function<std::vector<Output>(const Input&)> candidates;
  std::function<SparseVector(const Input&, const Output&)> features;
  // Hamming cost over output components; defaults to 0/1 loss.
  std::function<double(const Output& gold, const Output& guess)> cost;
  std::function<Output(const SparseVector& weights, const Input& input,
                       const Output* gold, double margin_cost)>
      decoder;
  // Membership in the output space; defaults to searching `candidates`.
  std::function<bool(const Input&, const Output&)> contains;
};

template <typename Input, typename Output>
struct SupersetExample {
  Input input;
  std::vector<Output> gold_set;
};

// Diagnostics from train_superset.
struct SupersetTrace {
  // Inner training runs performed.
  int outer_iterations = 0;
  // True iff a selection pass reproduced the previous one. No selection pass
  // follows the final permitted training run, so hitting the cap leaves this
  // false.
  bool converged = false;
  // Index into each gold_set chosen at every selection pass.
  std::vector<std::vector<std::size_t>> selections;
};

namespace learning_internal {

template <typename Input, typename Output>
double output_cost(const StructuredProblem<Input, Output>& problem,
                   const Output& gold, const Output& guess) {
  if (problem.cost) return problem.cost(gold, guess);
  return gold == guess ? 0.0 : 1.0;
}

// Highest w.phi(x, y) + margin_cost * cost(gold, y); first candidate wins ties.
template <typename Input, typename Output>
Output argmax(const StructuredProblem<Input, Output>& problem,
              const SparseVector& weights, const Input& input,
              const Output* gold, double margin_cost) {
  if (problem.decoder) return problem.decoder(weights, input, gold, margin_cost);
  std::vector<Output> space = problem.candidates(input);
  if (space.empty()) throw InvalidArgument("empty candidate space");
  std::size_t best = 0;
  double best_score = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    double s = weights.dot(problem.features(input, space[i]));
    if (gold) s += margin_cost * output_cost(problem, *gold, space[i]);
    if (i == 0 || s > best_score) {
      best = i;
      best_score = s;
    }
  }
  return space[best];
}

template <typename Input, typename Output>
bool in_space(const StructuredProblem<Input, Output>& problem,
              const Input& input, const Output& output) {
  if (problem.contains) return problem.contains(input, output);
  for (const Output& y : problem.candidates(input)) {
    if (y == output) return true;
  }
  return false;
}

// Fisher-Yates driven by raw mt19937_64 output, which is fully specified by
// the standard (unlike the distribution classes).
inline void shuffle(std::vector<std::size_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

}  // namespace learning_internal

// argmax over the output space under the model.
template <typename Input, typename Output>
Output predict(const LinearModel& model, const Input& input,
               const StructuredProblem<Input, Output>& problem) {
  return learning_internal::argmax(problem, model.weights, input,
                                   static_cast<const Output*>(nullptr), 0.0);
}

// Online large-margin training: for each example, in a seeded order per
// epoch, find the cost-augmented argmax y' and, if
//   margin_cost * cost(y, y') + w.phi(y') - w.phi(y) > 0,
// step w += learning_rate * (phi(y) - phi(y')). With config.average the
// result is the running average of w over all steps, computed as
// w - sum(t * update_t) / (T + 1).
//
// Throws InvalidArgument if a gold output lies outside the output space.
template <typename Input, typename Output>
LinearModel train_structured(
    const std::vector<std::pair<Input, Output>>& examples,
    const StructuredProblem<Input, Output>& problem,
    const LearnerConfig& config) {
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (!learning_internal::in_space(problem, examples[i].first,
                                     examples[i].second)) {
      throw InvalidArgument("gold output of example " + std::to_string(i) +
                            " is outside the output space");
    }
  }

  SparseVector weights;
  SparseVector accumulated;  // sum of step * update, for averaging
  double step = 1.0;
  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(config.seed);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    learning_internal::shuffle(order, rng);
    for (std::size_t idx : order) {
      const auto& [input, gold] = examples[idx];
      Output guess = learning_internal::argmax(problem, weights, input, &gold,
                                               config.margin_cost);
      if (!(guess == gold)) {
        SparseVector delta = problem.features(input, gold);
        delta.add(problem.features(input, guess), -1.0);
        double loss =
            config.margin_cost * learning_internal::output_cost(problem, gold, guess) -
            weights.dot(delta);
        if (loss > 0.0) {
          weights.add(delta, config.learning_rate);
          accumulated.add(delta, config.learning_rate * step);
        }
      }
      step += 1.0;
    }
  }

  LinearModel model;
  if (config.average && step > 1.0) {
    model.weights = weights;
    model.weights.add(accumulated, -1.0 / step);
  } else {
    model.weights = std::move(weights);
  }
  model.metadata = config.describe();
  model.metadata["examples"] = std::to_string(examples.size());
  return model;
}

// Structural SVM with superset supervision: starting from w = 0, repeatedly
// pick y_i* = argmax over Y_i of w.phi(x_i, y) (first member wins ties), then
// retrain from scratch on {(x_i, y_i*)}. Stops when a selection pass repeats
// the previous one or after config.max_outer_iters training runs. With
// singleton gold sets the result equals train_structured on the same pairs.
//
// Throws InvalidArgument on an empty gold set or a member outside the space.
template <typename Input, typename Output>
LinearModel train_superset(
    const std::vector<SupersetExample<Input, Output>>& examples,
    const StructuredProblem<Input, Output>& problem,
    const LearnerConfig& config, SupersetTrace* trace = nullptr) {
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (examples[i].gold_set.empty()) {
      throw InvalidArgument("example " + std::to_string(i) +
                            " has an empty gold set");
    }
    for (const Output& y : examples[i].gold_set) {
      if (!learning_internal::in_space(problem, examples[i].input, y)) {
        throw InvalidArgument("gold set of example " + std::to_string(i) +
                              " has a member outside the output space");
      }
    }
  }

  auto select = [&](const SparseVector& weights) {
    std::vector<std::size_t> chosen(examples.size(), 0);
    for (std::size_t i = 0; i < examples.size(); ++i) {
      const auto& ex = examples[i];
      double best = 0.0;
      for (std::size_t j = 0; j < ex.gold_set.size(); ++j) {
        double s = weights.dot(problem.features(ex.input, ex.gold_set[j]));
        if (j == 0 || s > best) {
          best = s;
          chosen[i] = j;
        }
      }
    }
    return chosen;
  };

  SupersetTrace local;
  SupersetTrace& t = trace ? *trace : local;
  t = SupersetTrace{};

  LinearModel model;
  model.metadata = config.describe();
  std::vector<std::size_t> selection = select(model.weights);
  t.selections.push_back(selection);
  while (t.outer_iterations < config.max_outer_iters) {
    std::vector<std::pair<Input, Output>> chosen;
    chosen.reserve(examples.size());
    for (std::size_t i = 0; i < examples.size(); ++i) {
      chosen.emplace_back(examples[i].input,
                          examples[i].gold_set[selection[i]]);
    }
    model = train_structured(chosen, problem, config);
    ++t.outer_iterations;
    if (t.outer_iterations >= config.max_outer_iters) break;

    std::vector<std::size_t> next = select(model.weights);
    t.selections.push_back(next);
    if (next == selection) {
      t.converged = true;
      break;
    }
    selection = std::move(next);
  }
  model.metadata["outer_iterations"] = std::to_string(t.outer_iterations);
  return model;
}

}  // namespace eqparse

#endif  // EQPARSE_LEARNING_TRAINER_H_
