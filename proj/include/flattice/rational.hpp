#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace flattice {

// All scalars in the library are exact rationals; there is no floating
// point anywhere in the computational path.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

/// Parses `-?digits(/digits)?`; rejects zero denominators and junk.
std::optional<Rational> parse_rational(std::string_view s);

/// Lowest terms; integers print without the denominator ("4/2" -> "2").
std::string rational_string(const Rational& r);

}  // namespace flattice
