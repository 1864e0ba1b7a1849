#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace oscount {

// mpq_class keeps every value canonical (lowest terms, positive
// denominator) after each arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "[-]digits" or "[-]digits/digits" with a nonzero denominator.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Larger of the numerator and denominator bit lengths.
std::size_t bit_length(const Rational& q);

}  // namespace oscount
