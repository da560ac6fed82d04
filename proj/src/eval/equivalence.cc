#include "eqparse/eval/equivalence.h"

#include <algorithm>
#include <set>

namespace eqparse {
namespace {

std::optional<Rational> fold(Op op, const Rational& a, const Rational& b) {
  switch (op) {
    case Op::kAdd: return a + b;
    case Op::kSub: return a - b;
    case Op::kMul: return a * b;
    case Op::kDiv:
      if (b.numerator() == 0) return std::nullopt;
      return a / b;
    case Op::kEq: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Expression canonicalize(const Expression& e) {
  if (e.kind() != Expression::Kind::kCompound) return e;
  Expression a = canonicalize(e.operands()[0]);
  Expression b = canonicalize(e.operands()[1]);
  if (e.op() == Op::kEq) {
    if (b < a) std::swap(a, b);
    return Expression::compound(Op::kEq, std::move(a), std::move(b));
  }
  if (a.kind() == Expression::Kind::kConstant &&
      b.kind() == Expression::Kind::kConstant) {
    if (auto v = fold(e.op(), a.value(), b.value())) {
      return Expression::constant(*v);
    }
  }
  return Expression::compound(e.op(), std::move(a), std::move(b));
}

bool grounding_matches(const Grounding& predicted, const Grounding& gold) {
  std::set<VarLabel> pred_labels, gold_labels;
  for (const VariableTrigger& v : predicted) pred_labels.insert(v.label);
  for (const VariableTrigger& v : gold) gold_labels.insert(v.label);
  if (pred_labels != gold_labels) return false;
  return std::all_of(predicted.begin(), predicted.end(),
                     [&](const VariableTrigger& v) {
                       return std::find(gold.begin(), gold.end(), v) !=
                              gold.end();
                     });
}

Grounding swap_labels(const Grounding& grounding) {
  Grounding out = grounding;
  for (VariableTrigger& v : out) {
    v.label = v.label == VarLabel::kV1 ? VarLabel::kV2 : VarLabel::kV1;
  }
  return out;
}

bool equations_equal(const Expression& predicted, const Expression& gold,
                     EquivalenceMode mode, const Grounding& predicted_grounding,
                     const std::vector<Grounding>& gold_groundings) {
  Expression g = canonicalize(gold);
  auto grounded = [&](const Grounding& p) {
    return std::any_of(gold_groundings.begin(), gold_groundings.end(),
                       [&](const Grounding& m) {
                         return grounding_matches(p, m);
                       });
  };
  if (canonicalize(predicted) == g) {
    if (mode == EquivalenceMode::kEquationOnly) return true;
    if (grounded(predicted_grounding)) return true;
  }
  if (canonicalize(eqparse::swap_labels(predicted)) == g) {
    if (mode == EquivalenceMode::kEquationOnly) return true;
    if (grounded(swap_labels(predicted_grounding))) return true;
  }
  return false;
}

}  // namespace eqparse
