#include "flattice/rational.hpp"

#include <cctype>

namespace flattice {

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-') {
    negative = true;
    i = 1;
  }
  auto read_digits = [&](BigInt& out) -> bool {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      out = out * 10 + (s[i] - '0');
      ++i;
    }
    return true;
  };
  BigInt num;
  if (!read_digits(num)) return std::nullopt;
  BigInt den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!read_digits(den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  Rational r(num, den);
  if (negative) r = -r;
  return r;
}

std::string rational_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

}  // namespace flattice
