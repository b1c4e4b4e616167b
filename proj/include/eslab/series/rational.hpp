#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eslab {

// Exact rational numbers and integers. GMP keeps mpq values canonical
// (positive denominator, reduced) after every arithmetic operation.
using BigRational = mpq_class;
using BigInt = mpz_class;

// Builds num/den in canonical form. Throws DomainError when den == 0.
BigRational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q". Throws DomainError on malformed input.
BigRational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

// value^exponent for a non-negative exponent.
BigRational pow(const BigRational& value, unsigned exponent);

}  // namespace eslab
