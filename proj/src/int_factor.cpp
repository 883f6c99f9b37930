#include "antlyzer/int_factor.hpp"

#include <algorithm>

namespace antlyzer {

namespace {

bool is_probable_prime(const bigint& n) {
    // 40 Miller-Rabin rounds; mpz_probab_prime_p returns 2 for proven primes
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Pollard rho (Brent variant would be faster; classic is plenty here)
bigint pollard_rho(const bigint& n) {
    if (n % 2 == 0)
        return 2;
    bigint x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            bigint diff = x > y ? x - y : y - x;
            if (sgn(diff) == 0)
                break; // cycle without factor, retry with new c
            d = gcd(diff, n);
        }
        if (d != 1 && d != n)
            return d;
        c += 1; // new polynomial
        if (c > 64)
            throw internal_error("pollard_rho: gave up on " + n.get_str());
    }
}

void factor_rec(const bigint& n, std::map<bigint, unsigned>& out) {
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    bigint d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::map<bigint, unsigned> factor_integer(const bigint& n) {
    if (sgn(n) == 0)
        throw precondition_error("factor_integer: n must be nonzero");
    bigint m = abs(n);
    std::map<bigint, unsigned> out;
    // peel small primes by trial division; keeps Pollard inputs odd and composite
    static const long small[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (long p : small) {
        while (m % p == 0) {
            out[bigint(p)] += 1;
            m /= p;
        }
    }
    if (m > 1)
        factor_rec(m, out);
    return out;
}

std::vector<bigint> positive_divisors(const bigint& n) {
    auto f = factor_integer(n);
    std::vector<bigint> divs{bigint(1)};
    for (const auto& [p, e] : f) {
        size_t base = divs.size();
        bigint pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

squarefree_split split_squarefree(const bigint& n) {
    auto f = factor_integer(n);
    squarefree_split s{1, 1};
    for (const auto& [p, e] : f) {
        if (e % 2 == 1)
            s.squarefree *= p;
        for (unsigned i = 0; i < e / 2; ++i)
            s.root *= p;
    }
    return s;
}

} // namespace antlyzer
