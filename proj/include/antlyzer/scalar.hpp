#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "antlyzer/rational.hpp"

namespace antlyzer {

// Exact element of a real multi-quadratic extension Q(sqrt(p1), ..., sqrt(pk)).
//
// The field descriptor is a sorted list of distinct primes. Keeping the
// radicands prime (rather than merely squarefree) makes joins of two fields a
// plain set union: products of square roots of distinct primes are linearly
// independent over Q, so "all coordinates zero" is equivalent to "the element
// is zero" with no extra reduction step. sqrt(6) is represented as the basis
// element sqrt(2)*sqrt(3) and printed back as sqrt(6).
//
// Coordinates are indexed by bitmask subsets of the descriptor; zero
// coordinates are never stored, and primes used by no coordinate are dropped,
// so the representation of a value is unique.
class scalar {
  public:
    scalar() = default; // zero
    scalar(const rational& r);
    scalar(long n) : scalar(rational(n)) {}
    scalar(int n) : scalar(rational(n)) {}

    // exact square root of a nonnegative integer / rational
    static scalar sqrt_int(const bigint& m);
    static scalar sqrt_rational(const rational& r);

    bool is_zero() const { return coords_.empty(); }
    bool is_rational() const { return primes_.empty(); }
    // pre: is_rational()
    rational rational_value() const;

    // exact sign in {-1, 0, +1}. Zero is decided structurally; nonzero values
    // are resolved by refining rational isolating intervals for each sqrt(p)
    // (Heron iteration) until the interval around the value excludes 0.
    int sign() const;

    scalar operator-() const;
    scalar& operator+=(const scalar& o);
    scalar& operator-=(const scalar& o);
    friend scalar operator+(scalar a, const scalar& b) { return a += b; }
    friend scalar operator-(scalar a, const scalar& b) { return a -= b; }
    friend scalar operator*(const scalar& a, const scalar& b);
    friend scalar operator/(const scalar& a, const scalar& b) { return a * b.inverse(); }

    scalar inverse() const; // pre: nonzero
    scalar pow(long e) const;

    friend bool operator==(const scalar& a, const scalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const scalar& a, const scalar& b) { return !(a == b); }

    bigint floor() const; // largest integer <= value

    double to_double() const;
    std::string str() const; // "a+b*sqrt(d)+..." with rational a, b

    // representation access (field-coordinate splitting, printing, tests)
    const std::vector<bigint>& radicands() const { return primes_; }
    const std::map<uint32_t, rational>& coords() const { return coords_; }
    bigint radicand_product(uint32_t mask) const;

  private:
    std::vector<bigint> primes_;          // sorted distinct primes, minimal
    std::map<uint32_t, rational> coords_; // subset mask -> coefficient, no zeros

    void normalize();
    static void align(scalar& a, scalar& b); // rewrite both over the joined field
};

inline int cmp(const scalar& a, const scalar& b) { return (a - b).sign(); }

} // namespace antlyzer
