#ifndef EQPARSE_TESTS_TEST_UTIL_H_
#define EQPARSE_TESTS_TEST_UTIL_H_

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eqparse/core/equation_tree.h"
#include "eqparse/text/sentence.h"
#include "eqparse/tree/tree_parser.h"

namespace eqparse::testing {

inline std::string data_path(const std::string& name) {
  return std::string(EQPARSE_DATA_DIR) + "/" + name;
}

inline Sentence make_sentence(const std::string& text,
                              std::vector<Span> nps = {}) {
  Sentence s;
  s.text = text;
  s.tokens = tokenize(text);
  s.np_chunks = std::move(nps);
  return s;
}

// Span of the first occurrence of `needle` at or after `from`.
inline Span find_span(const std::string& text, const std::string& needle,
                      std::size_t from = 0) {
  auto at = text.find(needle, from);
  if (at == std::string::npos) throw std::runtime_error("missing " + needle);
  return Span{static_cast<int>(at), static_cast<int>(at + needle.size())};
}

// Every binary tree over leaves [i, j) with every non-root label, calling
// `visit` on each complete EQ-rooted tree. Independent of the chart.
inline std::vector<NodePtr> all_subtrees(const TriggerList& t, int i, int j) {
  if (j - i == 1) return {Node::leaf(t[i])};
  std::vector<NodePtr> out;
  for (int k = i + 1; k < j; ++k) {
    auto left = all_subtrees(t, i, k);
    auto right = all_subtrees(t, k, j);
    for (const NodePtr& l : left) {
      for (const NodePtr& r : right) {
        for (auto [op, order] : node_labels()) {
          out.push_back(Node::internal(op, order, l, r));
        }
      }
    }
  }
  return out;
}

inline std::vector<EquationTree> all_trees(const TriggerList& t) {
  std::vector<EquationTree> out;
  const int n = static_cast<int>(t.size());
  for (int k = 1; k < n; ++k) {
    for (const NodePtr& l : all_subtrees(t, 0, k)) {
      for (const NodePtr& r : all_subtrees(t, k, n)) {
        out.emplace_back(Node::internal(Op::kEq, Order::kLR, l, r));
      }
    }
  }
  return out;
}

// Random sentence built from math phrases with n sorted triggers on
// distinct tokens.
struct RandomInstance {
  TreeInput input;
};

inline RandomInstance random_instance(std::mt19937_64& rng, int n) {
  static const std::vector<std::string> pool = {
      "sum of", "and", "less than", "more than", "by", "times", "as",
      "twice", "triple", "half", "difference of", "product of", "ratio of",
      "equals", "is", "minus", "exceeds", "plus", "multiplied by", "the",
      "increased", "subtracted", "faster than", "larger than", "of"};
  auto pick = [&](std::size_t m) { return rng() % m; };
  std::vector<std::string> words;
  std::vector<int> trigger_slots;
  for (int t = 0; t < n; ++t) {
    int filler = static_cast<int>(pick(3));
    for (int f = 0; f < filler; ++f) words.push_back(pool[pick(pool.size())]);
    trigger_slots.push_back(static_cast<int>(words.size()));
    words.push_back("@");
  }
  int filler = static_cast<int>(pick(3));
  for (int f = 0; f < filler; ++f) words.push_back(pool[pick(pool.size())]);

  std::string text;
  TriggerList triggers;
  bool have_v1 = false;
  int slot = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (!text.empty()) text += ' ';
    if (slot < n && trigger_slots[slot] == static_cast<int>(w)) {
      int start = static_cast<int>(text.size());
      bool variable = pick(3) == 0;
      if (variable) {
        text += "a number";
        VarLabel label = have_v1 && pick(2) ? VarLabel::kV2 : VarLabel::kV1;
        have_v1 = true;
        triggers.push_back(Trigger::variable(
            label, Span{start, static_cast<int>(text.size())}));
      } else {
        std::string word = pick(4) == 0
                               ? std::vector<std::string>{"twice", "triple",
                                                          "half"}[pick(3)]
                               : std::to_string(1 + pick(30));
        text += word;
        Rational v = word == "twice"    ? Rational(2)
                     : word == "triple" ? Rational(3)
                     : word == "half"   ? Rational(1, 2)
                                        : Rational(std::stoi(word));
        triggers.push_back(
            Trigger::quantity(v, Span{start, static_cast<int>(text.size())}));
      }
      ++slot;
    } else {
      text += words[w];
    }
  }
  text += ".";
  RandomInstance r;
  r.input.sentence = make_sentence(text);
  r.input.triggers = triggers;
  return r;
}

// Gaussian weights on every feature any candidate node of `input` can fire.
inline SparseVector random_weights(std::mt19937_64& rng, const TreeParser& p,
                                   const TreeInput& input) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  SparseVector w;
  const int n = static_cast<int>(input.triggers.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      for (int k = i + 1; k < j; ++k) {
        std::vector<std::pair<Op, Order>> labels = node_labels();
        if (i == 0 && j == n) labels = {{Op::kEq, Order::kLR}};
        for (auto [op, order] : labels) {
          for (const auto& [key, value] :
               p.node_features(input, i, k, j, op, order)) {
            if (!w.contains(key)) w.add(key, gauss(rng));
          }
        }
      }
    }
  }
  return w;
}

}  // namespace eqparse::testing

#endif  // EQPARSE_TESTS_TEST_UTIL_H_
