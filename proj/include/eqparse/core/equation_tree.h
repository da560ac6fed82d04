#ifndef EQPARSE_CORE_EQUATION_TREE_H_
#define EQPARSE_CORE_EQUATION_TREE_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqparse/core/trigger.h"

namespace eqparse {

// Operation labels in enumeration order; the CKY tie-break follows this order.
enum class Op { kAdd, kSub, kMul, kDiv, kEq };

// Child order for SUB and DIV. kRL evaluates right child op left child.
enum class Order { kLR, kRL };

std::string_view op_name(Op op);     // "ADD", "SUB", ...
std::string_view op_symbol(Op op);   // "+", "-", "*", "/", "="
std::string_view order_name(Order order);  // "LR" / "RL"
std::optional<Op> op_from_name(std::string_view name);
std::optional<Order> order_from_name(std::string_view name);

inline bool is_ordered(Op op) { return op == Op::kSub || op == Op::kDiv; }

class Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable equation tree node. Children are shared, so copying a tree is
// cheap and subtrees can be reused across candidate trees.
class Node {
 public:
  static NodePtr leaf(Trigger trigger);
  // The order is normalised to kLR for operations other than SUB and DIV.
  static NodePtr internal(Op op, Order order, NodePtr left, NodePtr right);

  bool is_leaf() const { return trigger_.has_value(); }
  const Trigger& trigger() const { return *trigger_; }
  Op op() const { return op_; }
  Order order() const { return order_; }
  const Node& left() const { return *left_; }
  const Node& right() const { return *right_; }
  const NodePtr& left_ptr() const { return left_; }
  const NodePtr& right_ptr() const { return right_; }

  friend bool operator==(const Node& a, const Node& b);

 private:
  Node() = default;

  std::optional<Trigger> trigger_;
  Op op_ = Op::kEq;
  Order order_ = Order::kLR;
  NodePtr left_;
  NodePtr right_;
};

// Leftmost / rightmost trigger location covered by the subtree.
int span_start(const Node& node);
int span_end(const Node& node);

// Leaves in left-to-right tree order.
std::vector<Trigger> leaves(const Node& node);

// A complete equation: the root is EQ, EQ appears nowhere else, and the
// leaves use at most two variable labels (V2 only together with V1).
class EquationTree {
 public:
  // Throws InvalidArgument if the structure violates the invariants above.
  explicit EquationTree(NodePtr root);

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  std::vector<Trigger> leaves() const { return eqparse::leaves(*root_); }

  friend bool operator==(const EquationTree& a, const EquationTree& b) {
    return *a.root_ == *b.root_;
  }

 private:
  NodePtr root_;
};

// True iff at every internal node the child spans do not intersect.
bool is_projective(const Node& node);
inline bool is_projective(const EquationTree& tree) {
  return is_projective(tree.root());
}

// Parenthesised prefix form with SUB/DIV written in evaluation order and
// ADD/MUL/EQ operands in tree order, e.g. "(= (* 2 V1) (- (* 3 V1) 25))".
std::string to_prefix(const Node& node);
inline std::string to_prefix(const EquationTree& tree) {
  return to_prefix(tree.root());
}

}  // namespace eqparse

#endif  // EQPARSE_CORE_EQUATION_TREE_H_
