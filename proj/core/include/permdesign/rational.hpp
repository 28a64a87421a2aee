#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace permdesign {

/// Arbitrary-precision signed integer. All counting is exact; nothing in the
/// library ever rounds.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept canonical (lowest terms, positive
/// denominator) by construction.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Int& value);

/// Serializes as "p/q" always, e.g. "3/4", "-1/20", "5/1", "0/1".
std::string to_string(const Rational& value);

Int parse_int(std::string_view text);

/// Accepts "p" and "p/q" forms.
Rational parse_rational(std::string_view text);

Rational make_rational(Int numerator, Int denominator);

} // namespace permdesign
