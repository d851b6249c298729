#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace ffd {

// Exact rational arithmetic; values are always stored in lowest terms with a
// positive denominator. No floating point anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts optional sign, "p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view s);

} // namespace ffd
