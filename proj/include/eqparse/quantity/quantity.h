#ifndef EQPARSE_QUANTITY_QUANTITY_H_
#define EQPARSE_QUANTITY_QUANTITY_H_

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqparse/core/rational.h"
#include "eqparse/core/trigger.h"
#include "eqparse/text/sentence.h"

namespace eqparse {

// Lowercase number words and their values ("twice" -> 2, "half" -> 1/2).
class NumberWordLexicon {
 public:
  NumberWordLexicon() = default;

  // The embedded default table.
  static const NumberWordLexicon& builtin();

  // One `word<TAB>value` pair per line; blank lines and lines starting with
  // '#' are skipped. Throws DataError on a malformed line or duplicate word.
  static NumberWordLexicon parse(std::istream& in);

  // Throws InvalidArgument for a non-lowercase or duplicate word.
  void add(std::string word, Rational value);

  std::optional<Rational> lookup(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::map<std::string, Rational, std::less<>>& entries() const {
    return words_;
  }

  // Serialises in the same format parse() reads, sorted by word.
  std::string to_text() const;

 private:
  std::map<std::string, Rational, std::less<>> words_;
};

// Finds single-token quantity mentions: digit/decimal/fraction tokens, tokens
// in the lexicon, and the numeric prefix of hyphenated tokens ("5-dollar").
// Results are sorted by span start and never overlap.
std::vector<QuantityTrigger> detect_quantities(
    std::string_view text, std::span<const Token> tokens,
    const NumberWordLexicon& lexicon = NumberWordLexicon::builtin());

// Corpus annotations when present, detection otherwise.
std::vector<QuantityTrigger> sentence_quantities(
    const Sentence& sentence,
    const NumberWordLexicon& lexicon = NumberWordLexicon::builtin());

}  // namespace eqparse

#endif  // EQPARSE_QUANTITY_QUANTITY_H_
