#include "propunit/rational.hpp"

#include <stdexcept>

namespace propunit {

std::string rational_to_string(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
  auto bad = [&]() { throw std::invalid_argument("bad rational: '" + s + "'"); };
  size_t i = 0;
  auto read_integer = [&](bool allow_sign) -> Integer {
    bool neg = false;
    if (allow_sign && i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) bad();
    Integer v(s.substr(start, i - start));
    return neg ? Integer(-v) : v;
  };
  Integer num = read_integer(true);
  Integer den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = read_integer(false);
    if (den == 0) bad();
  }
  if (i != s.size()) bad();
  return Rational(num, den);
}

std::string rational_to_decimal(const Rational& r, int digits) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Integer pow10 = 1;
  for (int k = 0; k < digits; ++k) pow10 *= 10;
  // round half away from zero
  Integer scaled = (num * pow10 * 2 + den) / (den * 2);
  Integer whole = scaled / pow10;
  Integer frac = scaled % pow10;
  std::string out;
  if (neg && scaled != 0) out += "-";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += ".";
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace propunit
