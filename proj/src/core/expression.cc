#include "eqparse/core/expression.h"

#include <cctype>

#include "eqparse/error.h"

namespace eqparse {
namespace {

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void write_prefix(const Expression& e, std::string& out) {
  switch (e.kind()) {
    case Expression::Kind::kConstant:
      out += format_rational(e.value());
      return;
    case Expression::Kind::kVariable:
      out += label_name(e.label());
      return;
    case Expression::Kind::kCompound:
      out += '(';
      out += op_symbol(e.op());
      for (const Expression& operand : e.operands()) {
        out += ' ';
        write_prefix(operand, out);
      }
      out += ')';
      return;
  }
}

class PrefixParser {
 public:
  explicit PrefixParser(std::string_view text) : text_(text) {}

  Expression parse_equation() {
    Expression result = parse_node(/*depth=*/0);
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    if (result.kind() != Expression::Kind::kCompound ||
        result.op() != Op::kEq) {
      fail("equation root must be '='");
    }
    return result;
  }

 private:
  Expression parse_node(int depth) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] != '(') return parse_atom();
    ++pos_;
    skip_space();
    std::string_view symbol = read_token();
    auto op = op_from_name(symbol);
    if (!op) fail("unknown operator '" + std::string(symbol) + "'");
    if ((*op == Op::kEq) != (depth == 0)) fail("'=' must appear at the root only");
    Expression first = parse_node(depth + 1);
    Expression second = parse_node(depth + 1);
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') {
      fail("expected ')' (operators are binary)");
    }
    ++pos_;
    return Expression::compound(*op, std::move(first), std::move(second));
  }

  Expression parse_atom() {
    std::string_view token = read_token();
    if (token == "V1") return Expression::variable(VarLabel::kV1);
    if (token == "V2") return Expression::variable(VarLabel::kV2);
    if (auto value = parse_rational(token)) return Expression::constant(*value);
    fail("bad atom '" + std::string(token) + "'");
  }

  std::string_view read_token() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (begin == pos_) fail("expected a token");
    return text_.substr(begin, pos_ - begin);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw DataError("equation '" + std::string(text_) + "': " + message +
                    " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_labels(const Expression& e, std::vector<VarLabel>& out) {
  if (e.kind() == Expression::Kind::kVariable) out.push_back(e.label());
  if (e.kind() != Expression::Kind::kCompound) return;
  for (const Expression& operand : e.operands()) collect_labels(operand, out);
}

void collect_constants(const Expression& e, std::vector<Rational>& out) {
  if (e.kind() == Expression::Kind::kConstant) out.push_back(e.value());
  if (e.kind() != Expression::Kind::kCompound) return;
  for (const Expression& operand : e.operands()) collect_constants(operand, out);
}

}  // namespace

Expression Expression::constant(Rational value) {
  Expression e;
  e.value_ = value;
  return e;
}

Expression Expression::variable(VarLabel label) {
  Expression e;
  e.value_ = label;
  return e;
}

Expression Expression::compound(Op op, Expression first, Expression second) {
  if ((op == Op::kAdd || op == Op::kMul) && second < first) {
    std::swap(first, second);
  }
  Expression e;
  e.value_ = std::make_shared<const Compound>(
      Compound{op, {std::move(first), std::move(second)}});
  return e;
}

Expression::Kind Expression::kind() const {
  return static_cast<Kind>(value_.index());
}

Op Expression::op() const {
  return std::get<std::shared_ptr<const Compound>>(value_)->op;
}

const std::vector<Expression>& Expression::operands() const {
  return std::get<std::shared_ptr<const Compound>>(value_)->operands;
}

std::strong_ordering operator<=>(const Expression& a, const Expression& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Expression::Kind::kConstant:
      return compare_rational(a.value(), b.value());
    case Expression::Kind::kVariable:
      return a.label() <=> b.label();
    case Expression::Kind::kCompound:
      break;
  }
  if (a.op() != b.op()) return a.op() <=> b.op();
  const auto& x = a.operands();
  const auto& y = b.operands();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != std::strong_ordering::equal) return c;
  }
  return x.size() <=> y.size();
}

Expression expr(const Node& node) {
  if (node.is_leaf()) {
    const Trigger& t = node.trigger();
    if (t.is_quantity()) return Expression::constant(t.as_quantity().value);
    return Expression::variable(t.as_variable().label);
  }
  Expression left = expr(node.left());
  Expression right = expr(node.right());
  if (is_ordered(node.op()) && node.order() == Order::kRL) {
    return Expression::compound(node.op(), std::move(right), std::move(left));
  }
  return Expression::compound(node.op(), std::move(left), std::move(right));
}

std::string to_prefix(const Expression& expression) {
  std::string out;
  write_prefix(expression, out);
  return out;
}

Expression parse_equation(std::string_view text) {
  Expression e = PrefixParser(text).parse_equation();
  std::vector<VarLabel> labels = variable_labels(e);
  bool has_v1 = false, has_v2 = false;
  for (VarLabel l : labels) (l == VarLabel::kV1 ? has_v1 : has_v2) = true;
  if (has_v2 && !has_v1) {
    throw DataError("equation '" + std::string(text) +
                    "': V2 used without V1");
  }
  return e;
}

std::optional<Rational> evaluate(const Expression& e, Rational v1,
                                 Rational v2) {
  switch (e.kind()) {
    case Expression::Kind::kConstant:
      return e.value();
    case Expression::Kind::kVariable:
      return e.label() == VarLabel::kV1 ? v1 : v2;
    case Expression::Kind::kCompound:
      break;
  }
  auto a = evaluate(e.operands()[0], v1, v2);
  auto b = evaluate(e.operands()[1], v1, v2);
  if (!a || !b) return std::nullopt;
  switch (e.op()) {
    case Op::kAdd:
      return *a + *b;
    case Op::kSub:
    case Op::kEq:
      return *a - *b;
    case Op::kMul:
      return *a * *b;
    case Op::kDiv:
      if (b->numerator() == 0) return std::nullopt;
      return *a / *b;
  }
  return std::nullopt;
}

Expression swap_labels(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::kConstant:
      return e;
    case Expression::Kind::kVariable:
      return Expression::variable(e.label() == VarLabel::kV1 ? VarLabel::kV2
                                                             : VarLabel::kV1);
    case Expression::Kind::kCompound:
      break;
  }
  return Expression::compound(e.op(), swap_labels(e.operands()[0]),
                              swap_labels(e.operands()[1]));
}

std::vector<VarLabel> variable_labels(const Expression& expression) {
  std::vector<VarLabel> out;
  collect_labels(expression, out);
  return out;
}

std::vector<Rational> constant_values(const Expression& expression) {
  std::vector<Rational> out;
  collect_constants(expression, out);
  return out;
}

}  // namespace eqparse
