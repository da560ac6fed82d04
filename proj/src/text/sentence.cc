#include "eqparse/text/sentence.h"

#include <cctype>

#include "eqparse/error.h"

namespace eqparse {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool is_split_punct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '"': case '(': case ')': case '[': case ']':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::pair<int, int> Sentence::token_range(const Span& span) const {
  int n = static_cast<int>(tokens.size());
  int first = 0;
  while (first < n && tokens[first].span.end <= span.start) ++first;
  if (span.empty()) {
    while (first < n && tokens[first].span.start < span.start) ++first;
    return {first, first};
  }
  int last = first;
  while (last < n && tokens[last].span.start < span.end) ++last;
  return {first, last};
}

std::string Sentence::word(int index) const {
  if (index < 0) return "<s>";
  if (index >= static_cast<int>(tokens.size())) return "</s>";
  return to_lower(tokens[index].text);
}

std::string Sentence::pos_tag(int index) const {
  if (index < 0) return "<s>";
  if (index >= static_cast<int>(tokens.size())) return "</s>";
  return tokens[index].pos;
}

std::vector<Token> align_tokens(std::string_view text,
                                const std::vector<std::string>& words,
                                const std::vector<std::string>& pos) {
  if (!pos.empty() && pos.size() != words.size()) {
    throw DataError("pos has " + std::to_string(pos.size()) +
                    " tags for " + std::to_string(words.size()) + " tokens");
  }
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w.empty()) throw DataError("empty token at index " + std::to_string(i));
    std::size_t at = text.find(w, cursor);
    if (at == std::string_view::npos) {
      throw DataError("token '" + w + "' (index " + std::to_string(i) +
                      ") not found in text after offset " +
                      std::to_string(cursor));
    }
    Span span{static_cast<int>(at), static_cast<int>(at + w.size())};
    tokens.push_back({w, span, pos.empty() ? "UNK" : pos[i]});
    cursor = at + w.size();
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t begin, std::size_t end) {
    if (end > begin) {
      tokens.push_back({std::string(text.substr(begin, end - begin)),
                        {static_cast<int>(begin), static_cast<int>(end)},
                        "UNK"});
    }
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::size_t end = i;
    // Peel punctuation off both ends; keep decimal points inside numbers.
    std::size_t lead = begin;
    while (lead < end && is_split_punct(text[lead])) {
      emit(lead, lead + 1);
      ++lead;
    }
    std::size_t trail = end;
    while (trail > lead && is_split_punct(text[trail - 1])) --trail;
    emit(lead, trail);
    for (std::size_t p = trail; p < end; ++p) emit(p, p + 1);
  }
  return tokens;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string normalize_for_match(std::string_view text) {
  std::string out = " ";
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                c == '\'' || c == '/' ||
                (c == '.' && i > 0 && i + 1 < text.size() &&
                 is_digit(text[i - 1]) && is_digit(text[i + 1]));
    if (!keep) c = ' ';
    if (c == ' ' && out.back() == ' ') continue;
    out += c;
  }
  if (out.back() != ' ') out += ' ';
  return out;
}

bool contains_phrase(std::string_view normalized_haystack,
                     std::string_view phrase) {
  std::string needle = " ";
  needle += phrase;
  needle += ' ';
  return normalized_haystack.find(needle) != std::string_view::npos;
}

}  // namespace eqparse
