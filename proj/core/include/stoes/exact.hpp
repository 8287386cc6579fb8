#pragma once

// Exact integer and rational arithmetic plus the combinatorial primitives
// (falling factorials, derangement numbers, Poisson partial sums) that every
// closed-form law in this library is assembled from.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace stoes {

using BigInt = mpz_class;
using BigRat = mpq_class;  // gmpxx keeps results canonical: lowest terms, den > 0

/// n(n-1)...(n-r+1). Empty product is 1; zero once r > n.
BigInt falling_factorial(std::uint64_t n, std::uint64_t r);

BigInt factorial(std::uint64_t n);

/// Number of fixed-point-free permutations of n objects, D_0 = 1, D_1 = 0.
BigInt derangement_number(std::uint64_t n);

/// D_0..D_n in one pass of the recurrence D_n = (n-1)(D_{n-1} + D_{n-2}).
std::vector<BigInt> derangement_numbers(std::uint64_t n);

/// sum_{i=0}^{k} j^i / i!, i.e. e^j P(Po(j) <= k). Zero for k < 0.
BigRat poisson_partial_sum(std::uint64_t j, std::int64_t k);

/// Binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// n! / (i! j! (n-i-j)!); 0 when any part is negative.
BigInt multinomial(std::int64_t n, std::int64_t i, std::int64_t j);

/// base^e for a possibly negative base. 0^0 = 1.
BigRat rat_pow(const BigRat& base, std::uint64_t e);
BigInt int_pow(const BigInt& base, std::uint64_t e);

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Decimal rendering of an exact rational, rounded half-to-even at `places`.
std::string to_fixed(const BigRat& value, int places);

/// Rounds to `places` decimals (half-to-even) and returns the rounded rational.
BigRat round_half_even(const BigRat& value, int places);

}  // namespace stoes
