#pragma once

#include <map>
#include <vector>

#include "antlyzer/rational.hpp"

namespace antlyzer {

// prime factorization of |n|, n != 0; returns prime -> exponent, primes ascending.
// trial division first, Pollard rho for what survives; exact for any bignum that
// is remotely plausible at the scale this analyzer works at.
std::map<bigint, unsigned> factor_integer(const bigint& n);

// all positive divisors of |n| (n != 0), ascending. count can be large for
// heavily composite n; callers cap their own enumeration budgets.
std::vector<bigint> positive_divisors(const bigint& n);

// |n| = square * squarefree; returns {squarefree part, square root of the rest}
struct squarefree_split {
    bigint squarefree;
    bigint root; // |n| == squarefree * root^2
};
squarefree_split split_squarefree(const bigint& n);

} // namespace antlyzer
