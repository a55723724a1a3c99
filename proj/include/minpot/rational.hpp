#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace minpot {

// Exact arithmetic everywhere: potentials, costs, matching weights and the
// combinatorial quantities are all rationals or big integers. Values are kept
// normalized (lowest terms, positive denominator) by the backend. Expression
// templates are off so the types compose with std algorithms and containers
// like ordinary values.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Fixed-point decimal with `digits` places, rounding half away from zero.
/// Used for table rendering, e.g. 17/6 -> "2.83" with digits = 2.
std::string to_fixed(const Rational& r, int digits);

double to_double(const Rational& r);

} // namespace minpot
