#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "antlyzer/error.hpp"

namespace antlyzer {

using bigint = mpz_class;

bigint gcd(const bigint& a, const bigint& b);
bigint lcm(const bigint& a, const bigint& b);

// exact rational number, always canonical: gcd(|num|, den) = 1, den > 0
class rational {
  public:
    rational() : v_(0) {}
    rational(long n) : v_(static_cast<signed long>(n)) {}
    rational(int n) : v_(n) {}
    explicit rational(const bigint& n) : v_(n) {}
    rational(const bigint& num, const bigint& den);
    rational(long num, long den) : rational(bigint(num), bigint(den)) {}

    static std::optional<rational> parse(std::string_view s); // "p" or "p/q"

    bigint num() const { return v_.get_num(); }
    bigint den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_one() const { return v_ == 1; }

    rational operator-() const;
    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o);

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    rational reciprocal() const;
    rational abs() const { return sign() < 0 ? -*this : *this; }
    rational pow(long e) const; // e may be negative (then *this != 0)

    bigint floor() const; // largest integer <= value
    bigint ceil() const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;

  private:
    mpq_class v_; // mpq keeps the canonical form for us after canonicalize()
};

inline rational operator+(long a, const rational& b) { return rational(a) + b; }
inline rational operator*(long a, const rational& b) { return rational(a) * b; }

} // namespace antlyzer
