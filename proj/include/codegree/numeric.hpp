#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace codegree {

/// Exact counts of co2 size. C(64, k-1) * (n-k+1)^2 can exceed 64 bits.
using Wide = unsigned __int128;

using BigInt = boost::multiprecision::cpp_int;

/// Always canonical: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(Wide value);
BigInt to_big(Wide value);

/// Throws ParameterError if the value does not fit.
Wide to_wide(const BigInt &value);

/// C(n, r) for 0 <= n <= 64 from a static table; 0 outside 0 <= r <= n.
std::uint64_t binom64(int n, int r);

/// C(n, r) for any n >= 0 from a memoized Pascal table; 0 outside 0 <= r <= n.
BigInt binom(int n, int r);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &value);

/// Accepts "p", "-p", "p/q". Throws ParameterError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// floor(value) for value >= 0.
BigInt floor_nonneg(const Rational &value);

} // namespace codegree
