#include "eqparse/core/rational.h"

#include <cctype>
#include <limits>

namespace eqparse {
namespace {

constexpr std::int64_t kMaxSafe = std::numeric_limits<std::int64_t>::max() / 10 - 9;

// Parses an unsigned run of digits, optionally with thousands separators.
std::optional<std::int64_t> parse_digits(std::string_view text,
                                         bool allow_commas) {
  if (text.empty()) return std::nullopt;
  std::int64_t value = 0;
  int group = -1;  // digits since the last comma, -1 before any comma
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' && allow_commas) {
      if (i == 0 || (group != -1 && group != 3)) return std::nullopt;
      group = 0;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (value > kMaxSafe) return std::nullopt;
    value = value * 10 + (c - '0');
    if (group != -1) ++group;
  }
  if (group != -1 && group != 3) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_digits(text.substr(0, slash), false);
    auto den = parse_digits(text.substr(slash + 1), false);
    if (!num || !den || *den == 0) return std::nullopt;
    value = Rational(*num, *den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 12) return std::nullopt;
    std::int64_t whole = 0;
    if (!int_part.empty()) {
      auto parsed = parse_digits(int_part, true);
      if (!parsed) return std::nullopt;
      whole = *parsed;
    }
    auto frac = parse_digits(frac_part, false);
    if (!frac) return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = Rational(whole) + Rational(*frac, scale);
  } else {
    auto parsed = parse_digits(text, true);
    if (!parsed) return std::nullopt;
    value = Rational(*parsed);
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& value) {
  std::int64_t num = value.numerator();
  std::int64_t den = value.denominator();
  if (den == 1) return std::to_string(num);

  // Terminating iff the reduced denominator has no prime factors besides 2, 5.
  std::int64_t rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  if (rest != 1) return std::to_string(num) + "/" + std::to_string(den);

  int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t magnitude = num < 0 ? -num : num;
  std::int64_t scaled = magnitude * (scale / den);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, digits - frac.size(), '0');
  std::string out = num < 0 ? "-" : "";
  out += std::to_string(scaled / scale);
  out += '.';
  out += frac;
  return out;
}

}  // namespace eqparse
