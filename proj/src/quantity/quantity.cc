#include "eqparse/quantity/quantity.h"

#include <cctype>
#include <regex>
#include <sstream>

#include "eqparse/error.h"

namespace eqparse {
namespace {

constexpr const char* kDefaultLexicon = R"(# word	value
zero	0
one	1
two	2
three	3
four	4
five	5
six	6
seven	7
eight	8
nine	9
ten	10
eleven	11
twelve	12
thirteen	13
fourteen	14
fifteen	15
sixteen	16
seventeen	17
eighteen	18
nineteen	19
twenty	20
thirty	30
forty	40
fifty	50
sixty	60
seventy	70
eighty	80
ninety	90
hundred	100
thousand	1000
dozen	12
twice	2
double	2
thrice	3
triple	3
half	1/2
quarter	1/4
)";

// Whole-token numbers: integers with optional thousands separators, decimals
// and simple fractions.
const std::regex& number_pattern() {
  static const std::regex re(
      R"(^[$]?(\d{1,3}(,\d{3})+|\d+)(\.\d+)?$|^[$]?\d+/\d+$)");
  return re;
}

// Hyphenated compounds whose prefix is a number, e.g. "5-dollar".
const std::regex& hyphen_prefix_pattern() {
  static const std::regex re(R"(^[$]?(\d+(\.\d+)?)-[A-Za-z])");
  return re;
}

}  // namespace

const NumberWordLexicon& NumberWordLexicon::builtin() {
  static const NumberWordLexicon lexicon = [] {
    std::istringstream in(kDefaultLexicon);
    return parse(in);
  }();
  return lexicon;
}

NumberWordLexicon NumberWordLexicon::parse(std::istream& in) {
  NumberWordLexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError("number words line " + std::to_string(line_no) +
                      ": expected word<TAB>value");
    }
    std::string word = line.substr(0, tab);
    auto value = parse_rational(line.substr(tab + 1));
    if (word.empty() || !value) {
      throw DataError("number words line " + std::to_string(line_no) +
                      ": bad entry '" + line + "'");
    }
    try {
      lexicon.add(word, *value);
    } catch (const InvalidArgument& e) {
      throw DataError("number words line " + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return lexicon;
}

void NumberWordLexicon::add(std::string word, Rational value) {
  if (word != to_lower(word)) {
    throw InvalidArgument("number word '" + word + "' is not lowercase");
  }
  if (!words_.emplace(std::move(word), value).second) {
    throw InvalidArgument("duplicate number word");
  }
}

std::optional<Rational> NumberWordLexicon::lookup(std::string_view word) const {
  auto it = words_.find(word);
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

std::string NumberWordLexicon::to_text() const {
  std::string out;
  for (const auto& [word, value] : words_) {
    out += word;
    out += '\t';
    out += format_rational(value);
    out += '\n';
  }
  return out;
}

std::vector<QuantityTrigger> detect_quantities(std::string_view text,
                                               std::span<const Token> tokens,
                                               const NumberWordLexicon& lexicon) {
  std::vector<QuantityTrigger> found;
  for (const Token& token : tokens) {
    std::string_view surface =
        text.substr(token.span.start, token.span.length());
    std::string str(surface);
    std::smatch match;
    int offset = (!str.empty() && str[0] == '$') ? 1 : 0;

    if (std::regex_match(str, number_pattern())) {
      if (auto value = parse_rational(surface.substr(offset))) {
        found.push_back({*value, {token.span.start + offset, token.span.end}});
      }
      continue;
    }
    if (auto value = lexicon.lookup(to_lower(surface))) {
      found.push_back({*value, token.span});
      continue;
    }
    if (std::regex_search(str, match, hyphen_prefix_pattern())) {
      std::string digits = match[1].str();
      if (auto value = parse_rational(digits)) {
        int start = token.span.start + offset;
        found.push_back({*value, {start, start + static_cast<int>(digits.size())}});
      }
      continue;
    }
    // Multiword and hyphenated number words ("twenty-five") need corpus
    // annotations.
  }
  return found;
}

std::vector<QuantityTrigger> sentence_quantities(const Sentence& sentence,
                                                 const NumberWordLexicon& lexicon) {
  if (sentence.quantities) return *sentence.quantities;
  return detect_quantities(sentence.text, sentence.tokens, lexicon);
}

}  // namespace eqparse
