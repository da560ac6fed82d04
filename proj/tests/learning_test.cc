#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eqparse/error.h"
#include "eqparse/learning/linear_model.h"
#include "eqparse/learning/sparse_vector.h"
#include "eqparse/learning/trainer.h"

namespace eqparse {
namespace {

// Inputs and outputs are small integers; features are indicators.
StructuredProblem<int, int> toy_problem(int outputs, bool shared) {
  StructuredProblem<int, int> p;
  p.candidates = [outputs](const int&) {
    std::vector<int> ys(outputs);
    for (int y = 0; y < outputs; ++y) ys[y] = y;
    return ys;
  };
  p.features = [shared](const int& x, const int& y) {
    SparseVector phi;
    phi.add("x=" + std::to_string(x) + "∧y=" + std::to_string(y));
    if (shared) phi.add("y=" + std::to_string(y));
    return phi;
  };
  return p;
}

double score(const LinearModel& m, const StructuredProblem<int, int>& p, int x,
             int y) {
  return m.weights.dot(p.features(x, y));
}

TEST(SparseVector, ArithmeticAndZeros) {
  SparseVector a;
  a.add("f", 2.0);
  a.add("g");
  a.add("f", -2.0);
  EXPECT_FALSE(a.contains("f"));
  EXPECT_EQ(a.size(), 1u);
  SparseVector b;
  b.add("g", 3.0);
  b.add("h", 5.0);
  EXPECT_DOUBLE_EQ(a.dot(b), 3.0);
  a.add(b, -1.0);
  EXPECT_DOUBLE_EQ(a.get("g"), -2.0);
  EXPECT_DOUBLE_EQ(a.get("h"), -5.0);
  EXPECT_DOUBLE_EQ(a.get("missing"), 0.0);
}

TEST(LinearModel, RoundTripIsBitExact) {
  LinearModel m;
  m.weights.add("a∧b", 0.1);
  m.weights.add("tab-free key", 1.0 / 3.0);
  m.weights.add("tiny", 4.9e-324);
  m.weights.add("neg", -123456.789e10);
  m.metadata = {{"epochs", "5"}, {"seed", "7"}};
  std::stringstream s;
  m.write(s);
  LinearModel back = LinearModel::read(s);
  EXPECT_EQ(back, m);
  std::stringstream again;
  back.write(again);
  std::stringstream first;
  m.write(first);
  EXPECT_EQ(again.str(), first.str());
}

TEST(LinearModel, RejectsMalformedInput) {
  std::istringstream bad_header("not-a-model 1 0\n");
  EXPECT_THROW(LinearModel::read(bad_header), DataError);
  std::istringstream short_body("eqparse-model 1 2\nf\t1\n");
  EXPECT_THROW(LinearModel::read(short_body), DataError);
  std::istringstream bad_weight("eqparse-model 1 1\nf\tabc\n");
  EXPECT_THROW(LinearModel::read(bad_weight), DataError);
}

TEST(Predict, ZeroModelPicksFirstCandidate) {
  auto p = toy_problem(5, true);
  EXPECT_EQ(predict(LinearModel{}, 3, p), 0);
}

TEST(Predict, UniqueIndicatorWins) {
  auto p = toy_problem(5, true);
  LinearModel m;
  m.weights.add("x=1∧y=3", 0.5);
  EXPECT_EQ(predict(m, 1, p), 3);
  EXPECT_EQ(predict(m, 2, p), 0);
}

TEST(Predict, EmptySpaceThrows) {
  StructuredProblem<int, int> p;
  p.candidates = [](const int&) { return std::vector<int>{}; };
  p.features = [](const int&, const int&) { return SparseVector{}; };
  EXPECT_THROW(predict(LinearModel{}, 0, p), InvalidArgument);
}

TEST(Predict, MatchesExhaustiveScoring) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    int outputs = 1 + static_cast<int>(rng() % 64);
    auto p = toy_problem(outputs, true);
    LinearModel m;
    for (int y = 0; y < outputs; ++y) {
      if (rng() % 3) m.weights.add("y=" + std::to_string(y), g(rng));
      if (rng() % 3) m.weights.add("x=0∧y=" + std::to_string(y), g(rng));
    }
    int best = 0;
    for (int y = 1; y < outputs; ++y) {
      if (score(m, p, 0, y) > score(m, p, 0, best)) best = y;
    }
    EXPECT_EQ(predict(m, 0, p), best);
  }
}

TEST(Predict, SharedConstantFeatureNeverChangesArgmax) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    auto p = toy_problem(10, true);
    LinearModel m;
    for (int y = 0; y < 10; ++y) m.weights.add("y=" + std::to_string(y), g(rng));
    int before = predict(m, 0, p);
    auto q = p;
    q.features = [f = p.features](const int& x, const int& y) {
      SparseVector phi = f(x, y);
      phi.add("constant");
      return phi;
    };
    m.weights.add("constant", 1000.0 * g(rng));
    EXPECT_EQ(predict(m, 0, q), before);
  }
}

TEST(TrainStructured, SeparableToySet) {
  auto p = toy_problem(2, false);
  std::vector<std::pair<int, int>> data = {{0, 1}, {1, 0}};
  LinearModel m = train_structured(data, p, LearnerConfig{});
  for (auto [x, y] : data) {
    EXPECT_GT(score(m, p, x, y), score(m, p, x, 1 - y));
    EXPECT_EQ(predict(m, x, p), y);
  }
  EXPECT_EQ(m.metadata.at("epochs"), "5");
  EXPECT_EQ(m.metadata.at("examples"), "2");
}

TEST(TrainStructured, ZeroEpochsGivesZeroModel) {
  auto p = toy_problem(3, true);
  LearnerConfig c;
  c.epochs = 0;
  LinearModel m = train_structured(std::vector<std::pair<int, int>>{{0, 2}}, p, c);
  EXPECT_TRUE(m.weights.empty());
  EXPECT_EQ(score(m, p, 0, 1), 0.0);
}

TEST(TrainStructured, DeterministicForSeed) {
  auto p = toy_problem(6, true);
  std::vector<std::pair<int, int>> data;
  for (int x = 0; x < 30; ++x) data.push_back({x % 7, (x * 5) % 6});
  LearnerConfig c;
  c.seed = 42;
  EXPECT_EQ(train_structured(data, p, c), train_structured(data, p, c));
}

TEST(TrainStructured, GoldOutsideSpaceThrows) {
  auto p = toy_problem(2, true);
  EXPECT_THROW(train_structured(std::vector<std::pair<int, int>>{{0, 5}}, p,
                                LearnerConfig{}),
               InvalidArgument);
}

TEST(TrainSuperset, SingletonsMatchStructured) {
  auto p = toy_problem(6, true);
  std::vector<std::pair<int, int>> flat;
  std::vector<SupersetExample<int, int>> sets;
  for (int x = 0; x < 20; ++x) {
    flat.push_back({x % 4, (x * 7) % 6});
    sets.push_back({x % 4, {(x * 7) % 6}});
  }
  LearnerConfig c;
  c.seed = 9;
  LinearModel a = train_structured(flat, p, c);
  LinearModel b = train_superset(sets, p, c);
  EXPECT_EQ(a.weights, b.weights);
}

TEST(TrainSuperset, ConvergesOnSharedMember) {
  auto p = toy_problem(4, true);
  std::vector<SupersetExample<int, int>> sets = {
      {0, {1, 0}}, {1, {2, 0}}, {2, {0, 3}}};
  SupersetTrace trace;
  LinearModel m = train_superset(sets, p, LearnerConfig{}, &trace);
  EXPECT_TRUE(trace.converged);
  EXPECT_LE(trace.outer_iterations, 10);
  for (const auto& ex : sets) {
    double best_member = -1e300, best_other = -1e300;
    for (int y = 0; y < 4; ++y) {
      double s = score(m, p, ex.input, y);
      bool member =
          std::find(ex.gold_set.begin(), ex.gold_set.end(), y) != ex.gold_set.end();
      (member ? best_member : best_other) = std::max(member ? best_member : best_other, s);
    }
    EXPECT_GT(best_member, best_other);
  }
}

TEST(TrainSuperset, OuterIterationCap) {
  auto p = toy_problem(4, true);
  std::vector<SupersetExample<int, int>> sets = {{0, {1, 2}}, {1, {3, 0}}};
  LearnerConfig c;
  c.max_outer_iters = 1;
  SupersetTrace trace;
  LinearModel m = train_superset(sets, p, c, &trace);
  EXPECT_EQ(trace.outer_iterations, 1);
  EXPECT_EQ(trace.selections.size(), 1u);
  EXPECT_FALSE(trace.converged);
  EXPECT_EQ(m.metadata.at("outer_iterations"), "1");
}

TEST(TrainSuperset, RejectsBadGoldSets) {
  auto p = toy_problem(3, true);
  EXPECT_THROW(train_superset(std::vector<SupersetExample<int, int>>{{0, {}}},
                              p, LearnerConfig{}),
               InvalidArgument);
  EXPECT_THROW(train_superset(std::vector<SupersetExample<int, int>>{{0, {7}}},
                              p, LearnerConfig{}),
               InvalidArgument);
}

}  // namespace
}  // namespace eqparse
