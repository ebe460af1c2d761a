#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tflab {

/// Exact rational value type. Every construction the library performs
/// (sums, products, reciprocals) is closed over the rationals, so no
/// approximation ever enters a computation.
using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// Accepts "p" or "p/q" with optional leading '-'. Returns nullopt on
/// malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view s);

}  // namespace tflab
