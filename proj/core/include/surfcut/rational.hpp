#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <optional>

namespace surfcut {

using BigInt = boost::multiprecision::cpp_int;

// Exact edge lengths; all arithmetic on lengths stays rational so that
// (1+eps) comparisons and oracle equality tests are decided exactly.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// Canonical "p/q" form in lowest terms, q >= 1 (always printed with the
/// denominator so files round-trip bit-exactly).
std::string rational_to_string(const Rational& r);

/// Parses "p/q" or a bare integer "p".
std::optional<Rational> parse_rational(const std::string& s);

/// Smallest integer t >= sqrt(num/den); requires num, den > 0.
BigInt ceil_sqrt_rational(const BigInt& num, const BigInt& den);

} // namespace surfcut
