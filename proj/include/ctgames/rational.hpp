#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ctgames {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "n" for integers, "n/d" otherwise, lowest terms,
/// positive denominator.
std::string to_canonical(const Rational& value);

/// Strict parse of the canonical form. Rejects anything else ("3/6", "1/1",
/// "+2", "2/-3", leading zeros) with a ParseError naming the offending text.
Rational parse_rational(const std::string& text);

}  // namespace ctgames
