#ifndef EQPARSE_CORE_EXPRESSION_H_
#define EQPARSE_CORE_EXPRESSION_H_

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eqparse/core/equation_tree.h"
#include "eqparse/core/rational.h"

namespace eqparse {

// Symbolic value of an equation tree node. Compound ADD/MUL operands are kept
// in sorted order; SUB/DIV operands are kept in evaluation order (minuend and
// dividend first); EQ operands keep their sides.
class Expression {
 public:
  enum class Kind { kConstant, kVariable, kCompound };

  static Expression constant(Rational value);
  static Expression variable(VarLabel label);
  static Expression compound(Op op, Expression first, Expression second);

  Kind kind() const;
  const Rational& value() const { return std::get<Rational>(value_); }
  VarLabel label() const { return std::get<VarLabel>(value_); }
  Op op() const;
  const std::vector<Expression>& operands() const;

  // Structural total order: constants < variables < compounds; constants by
  // value, variables by label, compounds by op then operands.
  friend std::strong_ordering operator<=>(const Expression& a,
                                          const Expression& b);
  friend bool operator==(const Expression& a, const Expression& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Expression() = default;

  struct Compound {
    Op op;
    std::vector<Expression> operands;
  };

  std::variant<Rational, VarLabel, std::shared_ptr<const Compound>> value_;
};

// Expression denoted by a tree node, resolving SUB/DIV child order.
Expression expr(const Node& node);
inline Expression expr(const EquationTree& tree) { return expr(tree.root()); }

// Prefix serialisation, e.g. "(= (* 2 V1) (- (* 3 V1) 25))".
std::string to_prefix(const Expression& expression);

// Parses the prefix form. Throws DataError on malformed text. Validates the
// equation shape: EQ at the root only, binary nodes, V2 only alongside V1.
Expression parse_equation(std::string_view text);

// Numeric value under an assignment of V1 and V2. EQ evaluates to the residual
// (left side minus right side). Returns nullopt on division by zero.
std::optional<Rational> evaluate(const Expression& expression, Rational v1,
                                 Rational v2);

// V1 <-> V2.
Expression swap_labels(const Expression& expression);

// Variable leaf labels in the expression, in left-to-right operand order.
std::vector<VarLabel> variable_labels(const Expression& expression);
// Constant leaf values in left-to-right operand order.
std::vector<Rational> constant_values(const Expression& expression);

}  // namespace eqparse

#endif  // EQPARSE_CORE_EXPRESSION_H_
