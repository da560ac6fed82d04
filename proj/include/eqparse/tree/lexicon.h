#ifndef EQPARSE_TREE_LEXICON_H_
#define EQPARSE_TREE_LEXICON_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqparse/core/equation_tree.h"

namespace eqparse {

// Text windows around a candidate internal node, already passed through
// normalize_for_match. left_token is set only when the left child is a leaf.
struct NodeContext {
  std::string mid;
  std::string left;
  std::string right;
  std::optional<std::string> left_token;
};

enum class ContextField { kMid, kLeft, kRight, kLeftToken };

// FIELD contains any of `phrases`. The phrase "<empty>" tests for a blank
// field (no tokens after normalization).
struct LexiconAtom {
  ContextField field;
  std::vector<std::string> phrases;
};

// A rule fires when every clause holds; a clause holds when any atom does.
struct LexiconRule {
  int id = 0;
  Op op = Op::kAdd;
  Order order = Order::kLR;
  std::vector<std::vector<LexiconAtom>> clauses;
};

struct LexiconMatch {
  int rule_id;
  Op op;
  Order order;
  friend bool operator==(const LexiconMatch&, const LexiconMatch&) = default;
};

bool atom_holds(const LexiconAtom& atom, const NodeContext& context);
bool rule_fires(const LexiconRule& rule, const NodeContext& context);

// Rules in precedence order, lowest first.
class LexiconRules {
 public:
  // The eleven math-phrase rules.
  static const LexiconRules& builtin();

  // One rule per line: id<TAB>OP<TAB>ORDER or -<TAB>clauses, where clauses
  // are joined by " & ", atoms inside a clause by " | ", and each atom is
  // FIELD:phrase,phrase with FIELD in MID, LEFT, RIGHT, LEFTTOKEN. Blank
  // lines and lines starting with '#' are skipped. Later lines take
  // precedence. Throws DataError with the line number on malformed input.
  static LexiconRules parse(std::istream& in);
  static LexiconRules parse_text(std::string_view text);

  // Output of the highest-precedence rule that fires.
  std::optional<LexiconMatch> match(const NodeContext& context) const;

  // Ids of every firing rule, lowest precedence first.
  std::vector<int> firing(const NodeContext& context) const;

  const std::vector<LexiconRule>& rules() const { return rules_; }
  std::string to_text() const;

 private:
  std::vector<LexiconRule> rules_;
};

}  // namespace eqparse

#endif  // EQPARSE_TREE_LEXICON_H_
