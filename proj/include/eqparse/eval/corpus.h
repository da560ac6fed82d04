#ifndef EQPARSE_EVAL_CORPUS_H_
#define EQPARSE_EVAL_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqparse/core/expression.h"
#include "eqparse/eval/equivalence.h"
#include "eqparse/text/sentence.h"

namespace eqparse {

struct AnnotatedExample {
  Sentence sentence;
  Expression equation = Expression::constant(0);
  std::vector<Grounding> groundings;
  int line = 0;
};

// Builds a sentence from a JSON object with `text` and optional `tokens`,
// `pos`, `np_chunks`, `quantities` and `constituents`. Without `tokens` the
// built-in tokenizer is used. With `require_np_chunks`, a missing or empty
// `np_chunks` field is a DataError naming the field.
Sentence sentence_from_json(const nlohmann::json& j, bool require_np_chunks);

// One example per non-blank line. Errors are DataErrors prefixed "line N:".
std::vector<AnnotatedExample> read_corpus(std::istream& in);
std::vector<AnnotatedExample> read_corpus_file(const std::filesystem::path& path);

nlohmann::json span_to_json(const Span& span);

}  // namespace eqparse

#endif  // EQPARSE_EVAL_CORPUS_H_
