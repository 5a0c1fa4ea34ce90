#include "citerank/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::int64_t pow10(int places) {
  std::int64_t p = 1;
  for (int i = 0; i < places; ++i) p *= 10;
  return p;
}

// numerator of value rounded half away from zero at `places` decimals,
// denominator pow10(places)
std::int64_t scaled_rounded(const Rational& value, int places) {
  using Wide = __int128;
  const Wide num = static_cast<Wide>(value.numerator()) * pow10(places);
  const Wide den = value.denominator();  // boost keeps it positive
  const bool negative = num < 0;
  const Wide a = negative ? -num : num;
  Wide q = a / den;
  const Wide r = a % den;
  if (2 * r >= den) ++q;
  return static_cast<std::int64_t>(negative ? -q : q);
}

}  // namespace

double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

Rational round_half_away(const Rational& value, int places) {
  return {scaled_rounded(value, places), pow10(places)};
}

std::string format_fixed(const Rational& value, int places) {
  std::int64_t scaled = scaled_rounded(value, places);
  std::string sign;
  if (scaled < 0) {
    sign = "-";
    scaled = -scaled;
  }
  const std::int64_t unit = pow10(places);
  std::string out = sign + std::to_string(scaled / unit);
  if (places > 0) {
    std::string frac = std::to_string(scaled % unit);
    out += "." + std::string(places - frac.size(), '0') + frac;
  }
  return out;
}

Rational rational_from_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  std::string_view rest = text;
  bool negative = false;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto dot = rest.find('.');
  const std::string_view whole = rest.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw ParseError("malformed number: " + std::string(text));
  for (std::string_view part : {whole, frac})
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("malformed number: " + std::string(text));
  if (frac.size() > 12 || whole.size() + frac.size() > 15)
    throw ParseError("number out of range: " + std::string(text));

  std::int64_t digits = 0;
  for (char c : whole) digits = digits * 10 + (c - '0');
  for (char c : frac) digits = digits * 10 + (c - '0');
  Rational value(digits, pow10(static_cast<int>(frac.size())));
  return negative ? -value : value;
}

}  // namespace citerank
