#include "eqparse/tree/tree_parser.h"

#include <algorithm>
#include <set>
#include <string>

#include "eqparse/error.h"

namespace eqparse {
namespace {

const std::string kAnd = "∧";

std::string label_suffix(Op op, Order order) {
  return kAnd + "op=" + std::string(op_name(op)) + kAnd + "ord=" +
         std::string(order_name(order));
}

char leaf_kind(const TriggerList& triggers, int i, int j) {
  if (j - i > 1) return 'N';
  return triggers[i].is_quantity() ? 'Q' : 'V';
}

struct Cell {
  bool ok = false;
  double score = 0.0;
  int k = 0;
  Op op = Op::kAdd;
  Order order = Order::kLR;
};

NodePtr build(const std::vector<std::vector<Cell>>& chart,
              const TriggerList& triggers, int i, int j) {
  if (j - i == 1) return Node::leaf(triggers[i]);
  const Cell& c = chart[i][j];
  return Node::internal(c.op, c.order, build(chart, triggers, i, c.k),
                        build(chart, triggers, c.k, j));
}

std::pair<int, int> collect(const Node& node, int& next,
                            std::vector<NodeKey>& out) {
  if (node.is_leaf()) {
    int i = next++;
    return {i, i + 1};
  }
  std::size_t slot = out.size();
  out.emplace_back();
  auto [i, k] = collect(node.left(), next, out);
  auto [k2, j] = collect(node.right(), next, out);
  out[slot] = NodeKey{i, k, j, node.op(), node.order()};
  return {i, j};
}

}  // namespace

const std::vector<std::pair<Op, Order>>& node_labels() {
  static const std::vector<std::pair<Op, Order>> labels = {
      {Op::kAdd, Order::kLR}, {Op::kSub, Order::kLR}, {Op::kSub, Order::kRL},
      {Op::kMul, Order::kLR}, {Op::kDiv, Order::kLR}, {Op::kDiv, Order::kRL}};
  return labels;
}

Span leaf_extent(const TriggerList& triggers, int i, int j) {
  Span e{triggers[i].span().start, triggers[i].span().end};
  for (int t = i + 1; t < j; ++t) {
    e.start = std::min(e.start, triggers[t].span().start);
    e.end = std::max(e.end, triggers[t].span().end);
  }
  return e;
}

NodeContext node_context(const Sentence& sentence, const TriggerList& triggers,
                         int i, int k, int j) {
  const int n = static_cast<int>(triggers.size());
  const int text_end = static_cast<int>(sentence.text.size());
  Span l = leaf_extent(triggers, i, k);
  Span r = leaf_extent(triggers, k, j);
  int node_start = std::min(l.start, r.start);
  int node_end = std::max(l.end, r.end);

  auto text = [&](int from, int to) {
    if (to <= from) return normalize_for_match("");
    return normalize_for_match(sentence.slice(Span{from, to}));
  };

  NodeContext c;
  c.mid = text(std::min(l.end, r.end), std::max(l.start, r.start));
  int left_from = i > 0 ? std::min(triggers[i - 1].span().end, node_start) : 0;
  c.left = text(left_from, node_start);
  int right_to =
      j < n ? std::max(triggers[j].span().start, node_end) : text_end;
  c.right = text(node_end, right_to);
  if (k == i + 1) c.left_token = text(l.start, l.end);
  return c;
}

std::vector<NodeKey> tree_nodes(const EquationTree& tree) {
  std::vector<NodeKey> out;
  int next = 0;
  collect(tree.root(), next, out);
  return out;
}

TreeParser::TreeParser(TreeParserOptions options, LexiconRules rules)
    : options_(options), rules_(std::move(rules)) {}

std::optional<LexiconMatch> TreeParser::constraint(const TreeInput& input,
                                                   int i, int k, int j) const {
  if (!options_.use_lexicon || options_.lexicon_as_features) return std::nullopt;
  return rules_.match(node_context(input.sentence, input.triggers, i, k, j));
}

SparseVector TreeParser::node_features(const TreeInput& input, int i, int k,
                                       int j, Op op, Order order) const {
  const Sentence& s = input.sentence;
  const TriggerList& t = input.triggers;
  const std::string suffix = label_suffix(op, order);
  SparseVector phi;
  phi.add("tbias" + suffix);

  Span l = leaf_extent(t, i, k);
  Span r = leaf_extent(t, k, j);
  const int boundaries[4] = {l.start, l.end, r.start, r.end};
  for (int b = 0; b < 4; ++b) {
    int next = s.token_range(Span{boundaries[b], boundaries[b]}).first;
    std::string tag = "b" + std::to_string(b);
    phi.add(tag + "_bi=" + s.word(next - 1) + "_" + s.word(next) + suffix);
    for (int d = 1; d <= options_.window; ++d) {
      std::string ds = std::to_string(d);
      phi.add(tag + "_prev" + ds + "=" + s.word(next - d) + suffix);
      phi.add(tag + "_next" + ds + "=" + s.word(next + d - 1) + suffix);
      phi.add(tag + "_prevpos" + ds + "=" + s.pos_tag(next - d) + suffix);
      phi.add(tag + "_nextpos" + ds + "=" + s.pos_tag(next + d - 1) + suffix);
    }
  }

  int mid_from = std::min(l.end, r.end);
  int mid_to = std::max(l.start, r.start);
  if (mid_to > mid_from) {
    auto [first, last] = s.token_range(Span{mid_from, mid_to});
    std::string prev;
    for (int x = first; x < last; ++x) {
      std::string w = s.word(x);
      phi.add("mid_uni=" + w + suffix);
      phi.add("mid_pos=" + s.pos_tag(x) + suffix);
      if (x > first) phi.add("mid_bi=" + prev + "_" + w + suffix);
      prev = std::move(w);
    }
  }

  char lk = leaf_kind(t, i, k);
  char rk = leaf_kind(t, k, j);
  phi.add(std::string("lkind=") + lk + suffix);
  phi.add(std::string("rkind=") + rk + suffix);
  if (lk == 'Q' && rk == 'Q') {
    bool smaller = t[i].as_quantity().value < t[k].as_quantity().value;
    phi.add(std::string("left_smaller=") + (smaller ? "true" : "false") +
            suffix);
  }

  if (op != Op::kEq && options_.use_lexicon && options_.lexicon_as_features) {
    auto m = rules_.match(node_context(s, t, i, k, j));
    if (m) phi.add("lex=" + std::to_string(m->rule_id) + suffix);
  }
  return phi;
}

SparseVector TreeParser::tree_features(const TreeInput& input,
                                       const EquationTree& tree) const {
  SparseVector phi;
  for (const NodeKey& key : tree_nodes(tree)) {
    phi.add(node_features(input, key.i, key.k, key.j, key.op, key.order));
  }
  return phi;
}

bool TreeParser::admissible(const TreeInput& input,
                            const EquationTree& tree) const {
  if (tree.leaves() != input.triggers) return false;
  std::vector<NodeKey> nodes = tree_nodes(tree);
  for (std::size_t x = 1; x < nodes.size(); ++x) {
    const NodeKey& key = nodes[x];
    auto forced = constraint(input, key.i, key.k, key.j);
    if (forced && (forced->op != key.op || forced->order != key.order)) {
      return false;
    }
  }
  return true;
}

bool TreeParser::crosses_syntax(const TreeInput& input, int i, int j) const {
  const Sentence& s = input.sentence;
  const std::vector<Span>& brackets =
      s.constituents.empty() ? s.np_chunks : s.constituents;
  Span e = leaf_extent(input.triggers, i, j);
  for (const Span& c : brackets) {
    if (e.overlaps(c) && !e.contains(c) && !c.contains(e)) return true;
  }
  return false;
}

std::optional<EquationTree> TreeParser::run_chart(
    const SparseVector& weights, const TreeInput& input,
    const std::vector<NodeKey>* gold, double cost_scale, bool conform) const {
  const int n = static_cast<int>(input.triggers.size());
  std::vector<std::vector<Cell>> chart(n + 1, std::vector<Cell>(n + 1));
  for (int i = 0; i < n; ++i) chart[i][i + 1].ok = true;

  auto node_score = [&](int i, int k, int j, Op op, Order order) {
    double s = weights.dot(node_features(input, i, k, j, op, order));
    if (gold && op != Op::kEq &&
        !std::binary_search(gold->begin(), gold->end(),
                            NodeKey{i, k, j, op, order})) {
      s += cost_scale;
    }
    return s;
  };

  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      int j = i + len;
      if (conform && crosses_syntax(input, i, j)) continue;
      Cell& cell = chart[i][j];
      for (int k = i + 1; k < j; ++k) {
        if (!chart[i][k].ok || !chart[k][j].ok) continue;
        double base = chart[i][k].score + chart[k][j].score;
        auto forced = constraint(input, i, k, j);
        for (auto [op, order] : node_labels()) {
          if (forced && (forced->op != op || forced->order != order)) continue;
          double s = base + node_score(i, k, j, op, order);
          if (!cell.ok || s > cell.score) cell = Cell{true, s, k, op, order};
        }
      }
    }
  }

  Cell& root = chart[0][n];
  for (int k = 1; k < n; ++k) {
    if (!chart[0][k].ok || !chart[k][n].ok) continue;
    double s = chart[0][k].score + chart[k][n].score +
               node_score(0, k, n, Op::kEq, Order::kLR);
    if (!root.ok || s > root.score) root = Cell{true, s, k, Op::kEq, Order::kLR};
  }
  if (!root.ok) return std::nullopt;
  return EquationTree(build(chart, input.triggers, 0, n));
}

EquationTree TreeParser::decode(const SparseVector& weights,
                                const TreeInput& input,
                                const EquationTree* gold,
                                double cost_scale) const {
  if (input.triggers.size() < 2) {
    throw InvalidArgument("tree decoding needs at least two triggers");
  }
  std::vector<NodeKey> gold_nodes;
  if (gold) {
    gold_nodes = tree_nodes(*gold);
    std::sort(gold_nodes.begin(), gold_nodes.end());
  }
  const std::vector<NodeKey>* g = gold ? &gold_nodes : nullptr;
  if (options_.conform_syntactic) {
    if (auto t = run_chart(weights, input, g, cost_scale, true)) return *t;
  }
  return *run_chart(weights, input, g, cost_scale, false);
}

double TreeParser::cost(const EquationTree& gold, const EquationTree& guess) {
  std::vector<NodeKey> g = tree_nodes(gold);
  std::set<NodeKey> gold_set(g.begin() + 1, g.end());
  std::vector<NodeKey> p = tree_nodes(guess);
  double c = 0.0;
  for (std::size_t x = 1; x < p.size(); ++x) {
    if (!gold_set.contains(p[x])) c += 1.0;
  }
  return c;
}

StructuredProblem<TreeInput, EquationTree> TreeParser::problem() const {
  StructuredProblem<TreeInput, EquationTree> p;
  p.features = [self = *this](const TreeInput& x, const EquationTree& y) {
    return self.tree_features(x, y);
  };
  p.decoder = [self = *this](const SparseVector& w, const TreeInput& x,
                             const EquationTree* gold, double margin_cost) {
    return self.decode(w, x, gold, margin_cost);
  };
  p.cost = &TreeParser::cost;
  p.contains = [self = *this](const TreeInput& x, const EquationTree& y) {
    return self.admissible(x, y);
  };
  return p;
}

EquationTree cky_decode(const LinearModel& model, const TreeParser& parser,
                        const Sentence& sentence, const TriggerList& triggers) {
  return parser.decode(model.weights, TreeInput{sentence, triggers});
}

}  // namespace eqparse
