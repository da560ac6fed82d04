#include "eqparse/core/trigger.h"

#include <algorithm>
#include <set>

#include "eqparse/error.h"

namespace eqparse {

void check_span(const Span& span, int text_length) {
  if (span.start < 0 || span.start > span.end || span.end > text_length) {
    throw InvalidArgument("span [" + std::to_string(span.start) + "," +
                          std::to_string(span.end) +
                          ") outside text of length " +
                          std::to_string(text_length));
  }
}

std::string_view label_name(VarLabel label) {
  return label == VarLabel::kV1 ? "V1" : "V2";
}

bool trigger_less(const Trigger& a, const Trigger& b) {
  if (location(a) != location(b)) return location(a) < location(b);
  if (a.is_quantity() != b.is_quantity()) return a.is_quantity();
  if (a.span().end != b.span().end) return a.span().end < b.span().end;
  if (a.is_variable()) return a.as_variable().label < b.as_variable().label;
  return false;
}

void sort_triggers(TriggerList& triggers) {
  std::stable_sort(triggers.begin(), triggers.end(), trigger_less);
}

void check_trigger_labels(const TriggerList& triggers) {
  if (triggers.size() < 2) {
    throw InvalidArgument("trigger list needs at least two triggers");
  }
  std::set<VarLabel> labels;
  for (const Trigger& t : triggers) {
    if (t.is_variable()) labels.insert(t.as_variable().label);
  }
  if (labels.count(VarLabel::kV2) && !labels.count(VarLabel::kV1)) {
    throw InvalidArgument("label V2 used without V1");
  }
}

std::string to_string(const Trigger& trigger) {
  std::string head = trigger.is_quantity()
                         ? format_rational(trigger.as_quantity().value)
                         : std::string(label_name(trigger.as_variable().label));
  return head + "@[" + std::to_string(trigger.span().start) + "," +
         std::to_string(trigger.span().end) + ")";
}

}  // namespace eqparse
