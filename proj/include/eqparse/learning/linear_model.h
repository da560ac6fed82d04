#ifndef EQPARSE_LEARNING_LINEAR_MODEL_H_
#define EQPARSE_LEARNING_LINEAR_MODEL_H_

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "eqparse/learning/sparse_vector.h"

namespace eqparse {

// Hyperparameters of the large-margin learner.
struct LearnerConfig {
  int epochs = 5;
  double learning_rate = 0.1;
  // Margin required per wrong output component (Hamming cost scale).
  double margin_cost = 1.0;
  // Cap on selection/retraining rounds for superset supervision.
  int max_outer_iters = 10;
  std::uint64_t seed = 1;
  bool average = true;

  // key=value pairs recorded in model metadata.
  std::map<std::string, std::string> describe() const;
};

// Linear scorer f(x, y) = w . phi(x, y) with free-form metadata.
struct LinearModel {
  SparseVector weights;
  std::map<std::string, std::string> metadata;

  double score(const SparseVector& features) const {
    return weights.dot(features);
  }

  // Text format:
  //   eqparse-model 1 <feature count> key=value ...
  //   <feature>\t<weight>            (sorted by feature name)
  // Weights use shortest round-trip formatting, so read(write(m)) == m.
  void write(std::ostream& out) const;
  // Throws DataError on malformed input.
  static LinearModel read(std::istream& in);

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

// Shortest decimal form that parses back to the identical double.
std::string format_weight(double value);

}  // namespace eqparse

#endif  // EQPARSE_LEARNING_LINEAR_MODEL_H_
