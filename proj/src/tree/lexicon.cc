#include "eqparse/tree/lexicon.h"

#include <istream>
#include <set>
#include <sstream>

#include "eqparse/error.h"
#include "eqparse/text/sentence.h"

namespace eqparse {
namespace {

constexpr std::string_view kEmptyPhrase = "<empty>";

constexpr std::string_view kBuiltinRules =
    "1\tADD\t-\tLEFT:sum of & MID:and | MID:<empty>\n"
    "2\tADD\t-\tMID:added to,plus,more than,taller than,greater than,"
    "larger than,faster than,longer than,increased\n"
    "3\tSUB\tLR\tMID:more than,taller than,greater than,larger than,"
    "faster than,longer than & RIGHT:by\n"
    "4\tSUB\tLR\tLEFT:difference of & MID:and | MID:<empty>\n"
    "5\tSUB\tLR\tLEFT:exceeds,minus,decreased\n"
    "6\tSUB\tRL\tMID:subtracted,shorter than,less than,slower than,"
    "smaller than\n"
    "7\tMUL\t-\tMID:multiplied by\n"
    "8\tMUL\t-\tLEFT:product of & MID:and\n"
    "9\tDIV\tLR\tLEFT:ratio of\n"
    "10\tMUL\t-\tLEFTTOKEN:thrice,triple,twice,double,half | MID:times\n"
    "11\tDIV\tRL\tLEFTTOKEN:thrice,triple,twice,double,half | MID:times"
    " & MID:as & RIGHT:as\n";

std::string_view field_name(ContextField f) {
  switch (f) {
    case ContextField::kMid: return "MID";
    case ContextField::kLeft: return "LEFT";
    case ContextField::kRight: return "RIGHT";
    case ContextField::kLeftToken: return "LEFTTOKEN";
  }
  return "";
}

std::optional<ContextField> field_from_name(std::string_view s) {
  for (ContextField f : {ContextField::kMid, ContextField::kLeft,
                         ContextField::kRight, ContextField::kLeftToken}) {
    if (field_name(f) == s) return f;
  }
  return std::nullopt;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return out;
}

LexiconAtom parse_atom(const std::string& text, int line) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw DataError("lexicon line " + std::to_string(line) +
                    ": atom without FIELD: '" + text + "'");
  }
  auto field = field_from_name(trim(text.substr(0, colon)));
  if (!field) {
    throw DataError("lexicon line " + std::to_string(line) +
                    ": unknown field in '" + text + "'");
  }
  LexiconAtom atom{*field, {}};
  for (std::string& p : split(std::string_view(text).substr(colon + 1), ",")) {
    if (p.empty()) {
      throw DataError("lexicon line " + std::to_string(line) +
                      ": empty phrase in '" + text + "'");
    }
    atom.phrases.push_back(p == kEmptyPhrase ? p : to_lower(p));
  }
  return atom;
}

}  // namespace

bool atom_holds(const LexiconAtom& atom, const NodeContext& context) {
  const std::string* field = nullptr;
  switch (atom.field) {
    case ContextField::kMid: field = &context.mid; break;
    case ContextField::kLeft: field = &context.left; break;
    case ContextField::kRight: field = &context.right; break;
    case ContextField::kLeftToken:
      if (!context.left_token) return false;
      field = &*context.left_token;
      break;
  }
  for (const std::string& phrase : atom.phrases) {
    if (phrase == kEmptyPhrase ? is_blank(*field)
                               : contains_phrase(*field, phrase)) {
      return true;
    }
  }
  return false;
}

bool rule_fires(const LexiconRule& rule, const NodeContext& context) {
  for (const auto& clause : rule.clauses) {
    bool any = false;
    for (const LexiconAtom& atom : clause) {
      if (atom_holds(atom, context)) {
        any = true;
        break;
      }
    }
    if (!any) return false;
  }
  return true;
}

const LexiconRules& LexiconRules::builtin() {
  static const LexiconRules rules = parse_text(kBuiltinRules);
  return rules;
}

LexiconRules LexiconRules::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

LexiconRules LexiconRules::parse(std::istream& in) {
  LexiconRules out;
  std::set<int> ids;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream fields(raw);
    for (std::string col; std::getline(fields, col, '\t');) {
      cols.push_back(trim(col));
    }
    auto fail = [&](const std::string& why) {
      throw DataError("lexicon line " + std::to_string(line) + ": " + why);
    };
    if (cols.size() != 4) fail("expected 4 tab-separated columns");
    LexiconRule rule;
    try {
      std::size_t used = 0;
      rule.id = std::stoi(cols[0], &used);
      if (used != cols[0].size()) fail("bad rule id");
    } catch (const std::logic_error&) {
      fail("bad rule id");
    }
    if (!ids.insert(rule.id).second) fail("duplicate rule id");
    auto op = op_from_name(cols[1]);
    if (!op || *op == Op::kEq) fail("bad operation '" + cols[1] + "'");
    rule.op = *op;
    if (cols[2] == "-") {
      if (is_ordered(rule.op)) fail("SUB and DIV rules need an order");
      rule.order = Order::kLR;
    } else {
      auto order = order_from_name(cols[2]);
      if (!order) fail("bad order '" + cols[2] + "'");
      rule.order = is_ordered(rule.op) ? *order : Order::kLR;
    }
    for (const std::string& clause : split(cols[3], " & ")) {
      std::vector<LexiconAtom> atoms;
      for (const std::string& atom : split(clause, " | ")) {
        atoms.push_back(parse_atom(atom, line));
      }
      rule.clauses.push_back(std::move(atoms));
    }
    out.rules_.push_back(std::move(rule));
  }
  return out;
}

std::optional<LexiconMatch> LexiconRules::match(
    const NodeContext& context) const {
  for (auto it = rules_.rbegin(); it != rules_.rend(); ++it) {
    if (rule_fires(*it, context)) return LexiconMatch{it->id, it->op, it->order};
  }
  return std::nullopt;
}

std::vector<int> LexiconRules::firing(const NodeContext& context) const {
  std::vector<int> ids;
  for (const LexiconRule& rule : rules_) {
    if (rule_fires(rule, context)) ids.push_back(rule.id);
  }
  return ids;
}

std::string LexiconRules::to_text() const {
  std::string out;
  for (const LexiconRule& rule : rules_) {
    out += std::to_string(rule.id) + "\t" + std::string(op_name(rule.op)) +
           "\t" + (is_ordered(rule.op) ? std::string(order_name(rule.order))
                                       : std::string("-")) +
           "\t";
    for (std::size_t c = 0; c < rule.clauses.size(); ++c) {
      if (c) out += " & ";
      for (std::size_t a = 0; a < rule.clauses[c].size(); ++a) {
        const LexiconAtom& atom = rule.clauses[c][a];
        if (a) out += " | ";
        out += std::string(field_name(atom.field)) + ":";
        for (std::size_t p = 0; p < atom.phrases.size(); ++p) {
          if (p) out += ",";
          out += atom.phrases[p];
        }
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace eqparse
