#ifndef EQPARSE_CORE_TRIGGER_H_
#define EQPARSE_CORE_TRIGGER_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eqparse/core/rational.h"

namespace eqparse {

// Half-open character interval [start, end) into a sentence.
struct Span {
  int start = 0;
  int end = 0;

  constexpr int length() const { return end - start; }
  constexpr bool empty() const { return end <= start; }
  constexpr bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  constexpr bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  friend constexpr auto operator<=>(const Span&, const Span&) = default;
};

// Throws InvalidArgument unless 0 <= start <= end <= text_length.
void check_span(const Span& span, int text_length);

enum class VarLabel { kV1, kV2 };

std::string_view label_name(VarLabel label);  // "V1" / "V2"

struct QuantityTrigger {
  Rational value;
  Span span;

  friend bool operator==(const QuantityTrigger&, const QuantityTrigger&) =
      default;
};

struct VariableTrigger {
  VarLabel label = VarLabel::kV1;
  Span span;

  friend bool operator==(const VariableTrigger&, const VariableTrigger&) =
      default;
};

// A leaf of an equation tree: either a quantity mention or a noun phrase
// standing for a variable.
class Trigger {
 public:
  Trigger(QuantityTrigger quantity) : value_(std::move(quantity)) {}
  Trigger(VariableTrigger variable) : value_(variable) {}

  static Trigger quantity(Rational value, Span span) {
    return Trigger(QuantityTrigger{value, span});
  }
  static Trigger variable(VarLabel label, Span span) {
    return Trigger(VariableTrigger{label, span});
  }

  bool is_quantity() const {
    return std::holds_alternative<QuantityTrigger>(value_);
  }
  bool is_variable() const { return !is_quantity(); }

  const QuantityTrigger& as_quantity() const {
    return std::get<QuantityTrigger>(value_);
  }
  const VariableTrigger& as_variable() const {
    return std::get<VariableTrigger>(value_);
  }
  const Span& span() const {
    return is_quantity() ? as_quantity().span : as_variable().span;
  }

  friend bool operator==(const Trigger&, const Trigger&) = default;

 private:
  std::variant<QuantityTrigger, VariableTrigger> value_;
};

// Character offset of a trigger's mention: the start of its span.
inline int location(const Trigger& trigger) { return trigger.span().start; }

// Total order used for trigger lists: location, then quantities before
// variables, then span end, then V1 before V2.
bool trigger_less(const Trigger& a, const Trigger& b);

using TriggerList = std::vector<Trigger>;

// Sorts in place with trigger_less (stable, so equal triggers keep index
// order).
void sort_triggers(TriggerList& triggers);

// Throws InvalidArgument when the list has fewer than two triggers, uses more
// than two labels, or uses V2 without V1.
void check_trigger_labels(const TriggerList& triggers);

// Short human-readable rendering, e.g. "25@[22,24)" or "V1@[6,14)".
std::string to_string(const Trigger& trigger);

}  // namespace eqparse

#endif  // EQPARSE_CORE_TRIGGER_H_
