#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace citerank {

// Exact arithmetic everywhere a displayed number is compared or a boundary is
// decided. Doubles appear only at the display/plot edge.
using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& value);

// Half-away-from-zero rounding at `places` decimals, as an exact rational.
Rational round_half_away(const Rational& value, int places);

// Fixed-point decimal string, half-away-from-zero. places == 0 omits the point.
std::string format_fixed(const Rational& value, int places);

// Parse a plain decimal like "0.10", "90", "-1.5" into an exact rational.
// Throws ParseError on malformed input.
Rational rational_from_decimal(std::string_view text);

}  // namespace citerank
