// Exact arbitrary-precision integers and rationals, plus the small set of
// helpers (floor, ceil, modular reduction, string round-trips) the rest of
// the library builds on. All geometry and all coloring decisions in this
// project are made in exact rational arithmetic; nothing here ever touches
// floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace apcolor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(num / den) for den > 0, exact for negative numerators too.
Integer floor_div(const Integer& num, const Integer& den);

/// Exact floor / ceil of a rational.
Integer rational_floor(const Rational& q);
Integer rational_ceil(const Rational& q);

/// Canonical representative of v mod p in [0, p).
std::int64_t mod_reduce(const Integer& v, std::int64_t p);

/// Parses "num/den", a plain integer, or a decimal string like "1.25"
/// (converted exactly). Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" (so "4" serializes as "4/1"); lossless round-trip
/// with parse_rational.
std::string rational_to_string(const Rational& q);

/// True iff q is the square of a rational; if so *root is set to the
/// nonnegative square root.
bool rational_sqrt(const Rational& q, Rational* root);

}  // namespace apcolor
