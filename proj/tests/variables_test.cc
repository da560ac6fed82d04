#include <gtest/gtest.h>

#include "eqparse/cli/bundle.h"
#include "eqparse/error.h"
#include "eqparse/eval/corpus.h"
#include "eqparse/eval/gold.h"
#include "eqparse/variables/variables.h"
#include "test_util.h"

namespace eqparse {
namespace {

using testing::find_span;
using testing::make_sentence;

TEST(VariableCandidates, TwoPhrasesGiveSinglesThenPair) {
  std::string text = "A number and another number.";
  Span a = find_span(text, "A number");
  Span b = find_span(text, "another number");
  Sentence s = make_sentence(text, {b, a});
  auto ys = enumerate_variable_candidates(s);
  ASSERT_EQ(ys.size(), 3u);
  EXPECT_EQ(ys[0], (VariableCandidate{{a}}));
  EXPECT_EQ(ys[1], (VariableCandidate{{b}}));
  EXPECT_EQ(ys[2], (VariableCandidate{{a, b}}));
}

TEST(VariableCandidates, PluralTwoPhraseAddsSelfPair) {
  std::string text = "The sum of two numbers is 80.";
  Span sum = find_span(text, "The sum");
  Span two = find_span(text, "two numbers");
  auto ys = enumerate_variable_candidates(make_sentence(text, {sum, two}));
  ASSERT_EQ(ys.size(), 4u);
  EXPECT_EQ(ys[2], (VariableCandidate{{sum, two}}));
  EXPECT_EQ(ys[3], (VariableCandidate{{two, two}}));
  EXPECT_TRUE(ys[3].same_np());
  EXPECT_TRUE(ys[3].two_variables());
}

TEST(VariableCandidates, DuplicateChunksCollapse) {
  std::string text = "A number is 5.";
  Span a = find_span(text, "A number");
  EXPECT_EQ(enumerate_variable_candidates(make_sentence(text, {a, a})).size(),
            1u);
}

TEST(VariableCandidates, NoPhrasesThrows) {
  EXPECT_THROW(enumerate_variable_candidates(make_sentence("5 is 5.")),
               InvalidArgument);
}

TEST(Coreference, Rules) {
  EXPECT_EQ(coreference_label("a number", "the same number"),
            Coreference::kSameLabel);
  EXPECT_EQ(coreference_label("a number", "itself"), Coreference::kSameLabel);
  EXPECT_EQ(coreference_label("A number", "a  NUMBER"),
            Coreference::kSameLabel);
  EXPECT_EQ(coreference_label("a number", "another number"),
            Coreference::kDifferentLabels);
  EXPECT_EQ(coreference_label("two numbers", "two numbers"),
            Coreference::kDifferentLabels);
  EXPECT_EQ(coreference_label("2 numbers", "2 numbers"),
            Coreference::kDifferentLabels);
  EXPECT_EQ(coreference_label("5-dollar", "10-dollar notes"),
            Coreference::kDifferentLabels);
}

TEST(VariableFeatures, ConjoinedWithCandidateShape) {
  std::string text = "Twice a number equals 16.";
  Span a = find_span(text, "a number");
  Sentence s = make_sentence(text, {a});
  SparseVector phi = variable_features(s, VariableCandidate{{a}});
  EXPECT_TRUE(phi.contains("np_unigram=number∧two=false∧same=false"));
  EXPECT_TRUE(phi.contains("np_bigram=a_number∧two=false∧same=false"));
  EXPECT_TRUE(phi.contains("np_head=number∧two=false∧same=false"));
  EXPECT_TRUE(phi.contains("np_left_uni=twice∧two=false∧same=false"));
  EXPECT_TRUE(phi.contains("np_right_uni=equals∧two=false∧same=false"));
  SparseVector pair = variable_features(s, VariableCandidate{{a, a}});
  EXPECT_TRUE(pair.contains("var_bias∧two=true∧same=true"));
  EXPECT_DOUBLE_EQ(pair.get("np_unigram=number∧two=true∧same=true"), 2.0);
}

TEST(AssignLabels, SingleIsV1) {
  std::string text = "A number plus 5 is 9.";
  Span a = find_span(text, "A number");
  auto v = assign_labels(make_sentence(text, {a}), VariableCandidate{{a}});
  EXPECT_EQ(v, (std::vector<VariableTrigger>{{VarLabel::kV1, a}}));
}

TEST(AssignLabels, SelfPairIsTwoVariables) {
  std::string text = "The sum of two numbers is 80.";
  Span two = find_span(text, "two numbers");
  auto v = assign_labels(make_sentence(text, {two}),
                         VariableCandidate{{two, two}});
  EXPECT_EQ(v, (std::vector<VariableTrigger>{{VarLabel::kV1, two},
                                             {VarLabel::kV2, two}}));
}

TEST(AssignLabels, CoreferentPairSharesLabel) {
  std::string text = "Twice a number equals 16 less than triple the same number.";
  Span a = find_span(text, "a number");
  Span b = find_span(text, "the same number");
  auto v = assign_labels(make_sentence(text, {a, b}),
                         VariableCandidate{{a, b}});
  EXPECT_EQ(v, (std::vector<VariableTrigger>{{VarLabel::kV1, a},
                                             {VarLabel::kV1, b}}));
}

TEST(AssignLabels, DistinctPairGetsTwoLabels) {
  std::string text = "There are 54 5-dollar and 10-dollar notes.";
  Span a = find_span(text, "5-dollar");
  Span b = find_span(text, "10-dollar notes");
  auto v = assign_labels(make_sentence(text, {a, b}),
                         VariableCandidate{{a, b}});
  EXPECT_EQ(v, (std::vector<VariableTrigger>{{VarLabel::kV1, a},
                                             {VarLabel::kV2, b}}));
  EXPECT_THROW(assign_labels(make_sentence(text), VariableCandidate{}),
               InvalidArgument);
}

TEST(AssignLabels, InvariantsOverCorpus) {
  auto corpus = read_corpus_file(testing::data_path("synthetic.jsonl"));
  for (const auto& ex : corpus) {
    for (const auto& y : enumerate_variable_candidates(ex.sentence)) {
      auto v = assign_labels(ex.sentence, y);
      ASSERT_EQ(v.size(), y.nps.size());
      EXPECT_EQ(v[0].label, VarLabel::kV1);
      for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_EQ(v[i].span, y.nps[i]);
        EXPECT_NE(std::find(ex.sentence.np_chunks.begin(),
                            ex.sentence.np_chunks.end(), v[i].span),
                  ex.sentence.np_chunks.end());
      }
    }
  }
}

TEST(VariableProblem, SlotHammingCost) {
  Span a{0, 3}, b{5, 8};
  auto p = variable_problem();
  EXPECT_DOUBLE_EQ(p.cost(VariableCandidate{{a}}, VariableCandidate{{a}}), 0);
  EXPECT_DOUBLE_EQ(p.cost(VariableCandidate{{a}}, VariableCandidate{{b}}), 1);
  EXPECT_DOUBLE_EQ(p.cost(VariableCandidate{{a}}, VariableCandidate{{a, b}}),
                   1);
  EXPECT_DOUBLE_EQ(
      p.cost(VariableCandidate{{a, b}}, VariableCandidate{{b, a}}), 2);
}

TEST(VariableTraining, SupersetPicksGoldSetMember) {
  auto corpus = read_corpus_file(testing::data_path("synthetic.jsonl"));
  auto extra = read_corpus_file(testing::data_path("comparisons.jsonl"));
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  TrainReport report;
  ModelBundle b = train_bundle(corpus, BundleConfig{}, LexiconRules::builtin(),
                               NumberWordLexicon::builtin(), &report);
  EXPECT_GT(report.variable_examples, 0);
  EXPECT_GE(report.variable_trace.outer_iterations, 1);
  EXPECT_LE(report.variable_trace.outer_iterations,
            BundleConfig{}.learner.max_outer_iters);
  TreeParser parser = b.parser();
  int hits = 0, total = 0;
  for (const auto& ex : corpus) {
    GoldStages gold = derive_gold(ex, parser, b.numbers);
    if (gold.variable_set.empty()) continue;
    ++total;
    VariableCandidate got = predict(b.variables, ex.sentence,
                                    variable_problem(b.config.variable_window));
    if (std::find(gold.variable_set.begin(), gold.variable_set.end(), got) !=
        gold.variable_set.end()) {
      ++hits;
    }
  }
  ASSERT_GT(total, 0);
  EXPECT_EQ(hits, total);
}

}  // namespace
}  // namespace eqparse
