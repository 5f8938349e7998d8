#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rotkit {

/// Exact rational arithmetic for threshold tests that are too thin for
/// doubles (e.g. b1 == 199/99 against a criterion threshold of 199/99).
using Rational = boost::rational<long long>;

/// Parses "p" or "p/q" with an optional leading sign. Reduction happens in
/// the Rational constructor. Returns nullopt on malformed input or q == 0.
std::optional<Rational> parse_rational(std::string_view text);

/// Nearest double after exact reduction.
double to_double(const Rational& r);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

}  // namespace rotkit
