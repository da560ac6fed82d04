#ifndef EQPARSE_TEXT_SENTENCE_H_
#define EQPARSE_TEXT_SENTENCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqparse/core/trigger.h"

namespace eqparse {

struct Token {
  std::string text;
  Span span;
  std::string pos;
};

// A sentence with the annotations the pipeline consumes. Tokens, POS tags and
// noun-phrase chunks come from the corpus (or the built-in whitespace
// tokenizer); quantity annotations, when present, replace detection.
struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<Span> np_chunks;
  std::optional<std::vector<QuantityTrigger>> quantities;
  // Optional syntactic brackets used by the conformance ablation.
  std::vector<Span> constituents;

  std::string_view slice(const Span& span) const {
    return std::string_view(text).substr(span.start, span.length());
  }

  // Half-open token index range [first, last) of tokens overlapping `span`.
  // For an empty span, both indices point at the first token starting at or
  // after span.start.
  std::pair<int, int> token_range(const Span& span) const;

  // Lowercased token text, or a boundary marker outside the sentence.
  std::string word(int index) const;
  std::string pos_tag(int index) const;
};

// Aligns `words` against `text` left to right. Throws DataError if a word
// cannot be found or the POS list has the wrong length. Empty `pos` tags every
// token "UNK".
std::vector<Token> align_tokens(std::string_view text,
                                const std::vector<std::string>& words,
                                const std::vector<std::string>& pos);

// Whitespace tokenizer that splits trailing sentence punctuation (.,;:!?) and
// leading/trailing quotes or brackets into separate tokens. POS tags are "UNK".
std::vector<Token> tokenize(std::string_view text);

std::string to_lower(std::string_view text);

// Lowercases, maps punctuation other than hyphens, apostrophes, periods inside
// numbers and slashes to spaces, collapses whitespace and pads with one space
// on each side, so that phrase tests can match on token boundaries.
std::string normalize_for_match(std::string_view text);

// True iff normalized `haystack` contains `phrase` on token boundaries.
// `haystack` must come from normalize_for_match.
bool contains_phrase(std::string_view normalized_haystack,
                     std::string_view phrase);

// True iff the normalized text has no tokens.
inline bool is_blank(std::string_view normalized) {
  return normalized.find_first_not_of(' ') == std::string_view::npos;
}

}  // namespace eqparse

#endif  // EQPARSE_TEXT_SENTENCE_H_
