#include "eqparse/core/equation_tree.h"

#include <algorithm>
#include <array>

#include "eqparse/error.h"

namespace eqparse {
namespace {

constexpr std::array<std::string_view, 5> kOpNames = {"ADD", "SUB", "MUL",
                                                      "DIV", "EQ"};
constexpr std::array<std::string_view, 5> kOpSymbols = {"+", "-", "*", "/",
                                                        "="};

void collect_leaves(const Node& node, std::vector<Trigger>& out) {
  if (node.is_leaf()) {
    out.push_back(node.trigger());
    return;
  }
  collect_leaves(node.left(), out);
  collect_leaves(node.right(), out);
}

void check_no_eq(const Node& node) {
  if (node.is_leaf()) return;
  if (node.op() == Op::kEq) {
    throw InvalidArgument("EQ may only label the root");
  }
  check_no_eq(node.left());
  check_no_eq(node.right());
}

// Returns (span_start, span_end) and whether every node below is projective.
struct SpanCheck {
  int start;
  int end;
  bool projective;
};

SpanCheck check_projective(const Node& node) {
  if (node.is_leaf()) {
    int loc = location(node.trigger());
    return {loc, loc, true};
  }
  SpanCheck l = check_projective(node.left());
  SpanCheck r = check_projective(node.right());
  bool here = l.end <= r.start || r.end <= l.start;
  return {std::min(l.start, r.start), std::max(l.end, r.end),
          l.projective && r.projective && here};
}

void write_prefix(const Node& node, std::string& out) {
  if (node.is_leaf()) {
    const Trigger& t = node.trigger();
    out += t.is_quantity() ? format_rational(t.as_quantity().value)
                           : std::string(label_name(t.as_variable().label));
    return;
  }
  const Node* first = &node.left();
  const Node* second = &node.right();
  if (is_ordered(node.op()) && node.order() == Order::kRL) {
    std::swap(first, second);
  }
  out += '(';
  out += op_symbol(node.op());
  out += ' ';
  write_prefix(*first, out);
  out += ' ';
  write_prefix(*second, out);
  out += ')';
}

}  // namespace

std::string_view op_name(Op op) { return kOpNames[static_cast<int>(op)]; }

std::string_view op_symbol(Op op) { return kOpSymbols[static_cast<int>(op)]; }

std::string_view order_name(Order order) {
  return order == Order::kLR ? "LR" : "RL";
}

std::optional<Op> op_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i) {
    if (name == kOpNames[i] || name == kOpSymbols[i]) return static_cast<Op>(i);
  }
  return std::nullopt;
}

std::optional<Order> order_from_name(std::string_view name) {
  if (name == "LR") return Order::kLR;
  if (name == "RL") return Order::kRL;
  return std::nullopt;
}

NodePtr Node::leaf(Trigger trigger) {
  auto node = std::shared_ptr<Node>(new Node());
  node->trigger_ = std::move(trigger);
  return node;
}

NodePtr Node::internal(Op op, Order order, NodePtr left, NodePtr right) {
  if (!left || !right) throw InvalidArgument("internal node needs two children");
  auto node = std::shared_ptr<Node>(new Node());
  node->op_ = op;
  node->order_ = is_ordered(op) ? order : Order::kLR;
  node->left_ = std::move(left);
  node->right_ = std::move(right);
  return node;
}

bool operator==(const Node& a, const Node& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.trigger() == b.trigger();
  return a.op_ == b.op_ && a.order_ == b.order_ && *a.left_ == *b.left_ &&
         *a.right_ == *b.right_;
}

int span_start(const Node& node) {
  if (node.is_leaf()) return location(node.trigger());
  return std::min(span_start(node.left()), span_start(node.right()));
}

int span_end(const Node& node) {
  if (node.is_leaf()) return location(node.trigger());
  return std::max(span_end(node.left()), span_end(node.right()));
}

std::vector<Trigger> leaves(const Node& node) {
  std::vector<Trigger> out;
  collect_leaves(node, out);
  return out;
}

EquationTree::EquationTree(NodePtr root) : root_(std::move(root)) {
  if (!root_ || root_->is_leaf() || root_->op() != Op::kEq) {
    throw InvalidArgument("equation tree root must be an EQ node");
  }
  check_no_eq(root_->left());
  check_no_eq(root_->right());
  check_trigger_labels(eqparse::leaves(*root_));
}

bool is_projective(const Node& node) { return check_projective(node).projective; }

std::string to_prefix(const Node& node) {
  std::string out;
  write_prefix(node, out);
  return out;
}

}  // namespace eqparse
