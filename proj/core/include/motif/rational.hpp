#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace motif {

using BigInt = mpz_class;
/// Exact coordinate values and LP quantities. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "a", "-a", "a/b" (decimal digits only). Throws Error{Parse} on anything else or b == 0.
Rational parse_rational(std::string_view text);

/// Renders "a" for integers and "a/b" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt pow(const BigInt& base, std::uint64_t exponent);

/// Least common multiple of the denominators of the given values (1 for an empty range).
template <typename Range>
BigInt lcm_of_denominators(const Range& values) {
  BigInt result = 1;
  for (const Rational& v : values) {
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.get_den_mpz_t());
  }
  return result;
}

/// Decides lhs <= base^exponent for a nonnegative rational exponent a/b by comparing
/// lhs^b <= base^a in integers. 0^0 is taken to be 1.
bool leq_power(const BigInt& lhs, const BigInt& base, const Rational& exponent);

/// Decides lhs == base^exponent in the same way.
bool eq_power(const BigInt& lhs, const BigInt& base, const Rational& exponent);

/// Converts a nonnegative BigInt that fits into 64 bits. Throws Error{InvalidArgument} otherwise.
std::uint64_t to_u64(const BigInt& value);

}  // namespace motif
