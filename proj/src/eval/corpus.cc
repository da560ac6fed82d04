#include "eqparse/eval/corpus.h"

#include <fstream>
#include <istream>

#include "eqparse/error.h"

namespace eqparse {
namespace {

using nlohmann::json;

Span span_from_json(const json& j, int text_length, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw DataError(std::string(field) + ": span must be [start, end]");
  }
  Span s{j[0].get<int>(), j[1].get<int>()};
  if (s.start < 0 || s.end < s.start || s.end > text_length) {
    throw DataError(std::string(field) + ": span [" + std::to_string(s.start) +
                    "," + std::to_string(s.end) + ") outside the text");
  }
  return s;
}

std::vector<Span> spans_from_json(const json& j, int text_length,
                                  const char* field) {
  if (!j.is_array()) throw DataError(std::string(field) + " must be a list");
  std::vector<Span> out;
  for (const json& s : j) out.push_back(span_from_json(s, text_length, field));
  return out;
}

std::vector<std::string> strings_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw DataError(std::string(field) + " must be a list");
  std::vector<std::string> out;
  for (const json& s : j) {
    if (!s.is_string()) {
      throw DataError(std::string(field) + " must hold strings");
    }
    out.push_back(s.get<std::string>());
  }
  return out;
}

Rational value_from_json(const json& j) {
  std::optional<Rational> v;
  if (j.is_string()) {
    v = parse_rational(j.get<std::string>());
  } else if (j.is_number()) {
    v = parse_rational(j.dump());
  }
  if (!v) throw DataError("quantities: bad value " + j.dump());
  return *v;
}

VarLabel label_from_json(const json& j) {
  if (j == "V1") return VarLabel::kV1;
  if (j == "V2") return VarLabel::kV2;
  throw DataError("groundings: bad label " + j.dump());
}

AnnotatedExample example_from_json(const json& j) {
  AnnotatedExample ex;
  ex.sentence = sentence_from_json(j, /*require_np_chunks=*/true);
  if (!j.contains("equation") || !j["equation"].is_string()) {
    throw DataError("missing field 'equation'");
  }
  ex.equation = parse_equation(j["equation"].get<std::string>());

  const int len = static_cast<int>(ex.sentence.text.size());
  if (j.contains("groundings")) {
    if (!j["groundings"].is_array()) {
      throw DataError("groundings must be a list of lists");
    }
    for (const json& member : j["groundings"]) {
      if (!member.is_array()) {
        throw DataError("groundings must be a list of lists");
      }
      Grounding g;
      for (const json& v : member) {
        if (!v.is_object() || !v.contains("label") || !v.contains("np_span")) {
          throw DataError("groundings entries need 'label' and 'np_span'");
        }
        VariableTrigger t{label_from_json(v["label"]),
                          span_from_json(v["np_span"], len, "np_span")};
        const auto& nps = ex.sentence.np_chunks;
        if (std::find(nps.begin(), nps.end(), t.span) == nps.end()) {
          throw DataError("grounding span [" + std::to_string(t.span.start) +
                          "," + std::to_string(t.span.end) +
                          ") is not an NP chunk");
        }
        g.push_back(t);
      }
      ex.groundings.push_back(std::move(g));
    }
  }
  if (!variable_labels(ex.equation).empty() && ex.groundings.empty()) {
    throw DataError("equation has variables but 'groundings' is empty");
  }
  return ex;
}

}  // namespace

json span_to_json(const Span& span) { return json::array({span.start, span.end}); }

Sentence sentence_from_json(const json& j, bool require_np_chunks) {
  if (!j.is_object()) throw DataError("expected a JSON object");
  if (!j.contains("text") || !j["text"].is_string()) {
    throw DataError("missing field 'text'");
  }
  Sentence s;
  s.text = j["text"].get<std::string>();
  const int len = static_cast<int>(s.text.size());

  std::vector<std::string> pos;
  if (j.contains("pos")) pos = strings_from_json(j["pos"], "pos");
  if (j.contains("tokens")) {
    s.tokens = align_tokens(s.text, strings_from_json(j["tokens"], "tokens"),
                            pos);
  } else {
    s.tokens = tokenize(s.text);
    if (!pos.empty()) {
      if (pos.size() != s.tokens.size()) {
        throw DataError("pos has " + std::to_string(pos.size()) +
                        " tags for " + std::to_string(s.tokens.size()) +
                        " tokens");
      }
      for (std::size_t i = 0; i < pos.size(); ++i) s.tokens[i].pos = pos[i];
    }
  }

  if (j.contains("np_chunks")) {
    s.np_chunks = spans_from_json(j["np_chunks"], len, "np_chunks");
  }
  if (require_np_chunks && s.np_chunks.empty()) {
    throw DataError("missing field 'np_chunks'");
  }
  if (j.contains("constituents")) {
    s.constituents = spans_from_json(j["constituents"], len, "constituents");
  }
  if (j.contains("quantities")) {
    if (!j["quantities"].is_array()) {
      throw DataError("quantities must be a list");
    }
    std::vector<QuantityTrigger> qs;
    for (const json& q : j["quantities"]) {
      if (!q.is_object() || !q.contains("value") || !q.contains("span")) {
        throw DataError("quantities entries need 'value' and 'span'");
      }
      Span span = span_from_json(q["span"], len, "quantities");
      if (span.empty()) throw DataError("quantities: empty span");
      qs.push_back({value_from_json(q["value"]), span});
    }
    std::stable_sort(qs.begin(), qs.end(),
                     [](const QuantityTrigger& a, const QuantityTrigger& b) {
                       return a.span < b.span;
                     });
    s.quantities = std::move(qs);
  }
  return s;
}

std::vector<AnnotatedExample> read_corpus(std::istream& in) {
  std::vector<AnnotatedExample> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      AnnotatedExample ex = example_from_json(json::parse(raw));
      ex.line = line;
      out.push_back(std::move(ex));
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line) + ": " + e.what());
    } catch (const Error& e) {
      throw DataError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

std::vector<AnnotatedExample> read_corpus_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read corpus " + path.string());
  return read_corpus(in);
}

}  // namespace eqparse
