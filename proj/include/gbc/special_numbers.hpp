#pragma once

// Classical special numbers used by the closed forms. Every function is
// total on n >= 0: indices outside the triangle give 0, never an error.
// Stirling tables are memoized behind a mutex and safe to call from
// several threads.

#include "gbc/rational.hpp"

namespace gbc {

/// C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

BigInt factorial(long n);

/// x (x+1) ... (x+n-1); 1 when n = 0.
Rational rising_factorial(const Rational& x, long n);

/// Unsigned first kind: permutations of n elements with k cycles.
BigInt stirling_first_unsigned(long n, long k);

/// Second kind: partitions of an n-set into k nonempty blocks.
BigInt stirling_second(long n, long k);

BigInt bell(long n);

}  // namespace gbc
