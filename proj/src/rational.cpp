#include "antlyzer/rational.hpp"

namespace antlyzer {

bigint gcd(const bigint& a, const bigint& b) {
    bigint g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bigint lcm(const bigint& a, const bigint& b) {
    bigint l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

rational::rational(const bigint& num, const bigint& den) {
    if (sgn(den) == 0)
        throw math_error("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

std::optional<rational> rational::parse(std::string_view s) {
    // grammar: ["-"] digits ["/" digits]; no whitespace inside
    if (s.empty())
        return std::nullopt;
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '-') {
        neg = true;
        ++pos;
    }
    auto take_digits = [&](bigint& out) -> bool {
        size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
            ++pos;
        if (pos == start)
            return false;
        out = bigint(std::string(s.substr(start, pos - start)), 10);
        return true;
    };
    bigint num, den = 1;
    if (!take_digits(num))
        return std::nullopt;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!take_digits(den) || sgn(den) == 0)
            return std::nullopt;
    }
    if (pos != s.size())
        return std::nullopt;
    rational r(num, den);
    return neg ? -r : r;
}

rational rational::operator-() const {
    rational r;
    r.v_ = -v_;
    return r;
}

rational& rational::operator/=(const rational& o) {
    if (o.is_zero())
        throw math_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

rational rational::reciprocal() const {
    if (is_zero())
        throw math_error("rational: reciprocal of zero");
    rational r;
    r.v_ = 1 / v_;
    return r;
}

rational rational::pow(long e) const {
    if (e == 0)
        return rational(1);
    rational base = e > 0 ? *this : reciprocal();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    bigint n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return rational(n, d); // canonical already, but constructor re-normalizes cheaply
}

bigint rational::floor() const {
    bigint q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

bigint rational::ceil() const {
    bigint q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string rational::str() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

} // namespace antlyzer
