#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gptlab {

// Exact rational scalar used for every coordinate and coefficient in the
// library. GMP keeps values canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major, rectangular

/// Parses "p/q", plain integers, and decimal strings such as "-0.25" or
/// "3e-2" into an exact rational. Throws std::invalid_argument on anything
/// else (including zero denominators).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

std::string to_string(const Vec& v);

double to_double(const Rational& r);

/// Exact rational from a double via its shortest round-tripping decimal
/// representation, so 0.1 becomes 1/10 rather than the binary fraction.
Rational rational_from_double(double x);

}  // namespace gptlab
