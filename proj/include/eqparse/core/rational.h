#ifndef EQPARSE_CORE_RATIONAL_H_
#define EQPARSE_CORE_RATIONAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace eqparse {

using Rational = boost::rational<std::int64_t>;

// Accepts integers ("25", "-3", "1,000"), decimals ("18.95") and fractions
// ("1/2"). Returns nullopt for anything else, including a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Terminating decimals print in decimal notation ("0.5", "18.95"), all other
// values as "p/q". parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& value);

}  // namespace eqparse

#endif  // EQPARSE_CORE_RATIONAL_H_
