#include "antlyzer/scalar.hpp"

#include <algorithm>
#include <cmath>

#include "antlyzer/int_factor.hpp"

namespace antlyzer {

namespace {

// closed rational interval; used for sign refinement only
struct qinterval {
    rational lo, hi;
};

qinterval mul_pos(const qinterval& a, const qinterval& b) {
    // both intervals strictly positive
    return {a.lo * b.lo, a.hi * b.hi};
}

} // namespace

scalar::scalar(const rational& r) {
    if (!r.is_zero())
        coords_[0] = r;
}

void scalar::normalize() {
    for (auto it = coords_.begin(); it != coords_.end();) {
        if (it->second.is_zero())
            it = coords_.erase(it);
        else
            ++it;
    }
    if (primes_.empty())
        return;
    uint32_t used = 0;
    for (const auto& [m, c] : coords_)
        used |= m;
    uint32_t full = (primes_.size() >= 32) ? 0xffffffffu : ((1u << primes_.size()) - 1);
    if (used == full)
        return;
    // drop primes no coordinate mentions and compress the masks
    std::vector<bigint> kept;
    std::vector<int> newbit(primes_.size(), -1);
    for (size_t i = 0; i < primes_.size(); ++i) {
        if (used & (1u << i)) {
            newbit[i] = static_cast<int>(kept.size());
            kept.push_back(primes_[i]);
        }
    }
    std::map<uint32_t, rational> remapped;
    for (const auto& [m, c] : coords_) {
        uint32_t nm = 0;
        for (size_t i = 0; i < primes_.size(); ++i)
            if (m & (1u << i))
                nm |= (1u << newbit[i]);
        remapped[nm] = c;
    }
    primes_ = std::move(kept);
    coords_ = std::move(remapped);
}

void scalar::align(scalar& a, scalar& b) {
    if (a.primes_ == b.primes_)
        return;
    std::vector<bigint> joined;
    std::merge(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
               std::back_inserter(joined));
    joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
    if (joined.size() > 32)
        throw internal_error("scalar: more than 32 distinct prime radicands");
    auto remap = [&](scalar& s) {
        std::vector<int> bit(s.primes_.size());
        for (size_t i = 0; i < s.primes_.size(); ++i) {
            auto it = std::lower_bound(joined.begin(), joined.end(), s.primes_[i]);
            bit[i] = static_cast<int>(it - joined.begin());
        }
        std::map<uint32_t, rational> out;
        for (const auto& [m, c] : s.coords_) {
            uint32_t nm = 0;
            for (size_t i = 0; i < s.primes_.size(); ++i)
                if (m & (1u << i))
                    nm |= (1u << bit[i]);
            out[nm] = c;
        }
        s.primes_ = joined;
        s.coords_ = std::move(out);
    };
    remap(a);
    remap(b);
}

scalar scalar::sqrt_int(const bigint& m) {
    if (sgn(m) < 0)
        throw math_error("scalar: square root of a negative integer");
    if (sgn(m) == 0)
        return scalar();
    auto parts = split_squarefree(m);
    if (parts.squarefree == 1)
        return scalar(rational(parts.root));
    scalar s;
    for (const auto& [p, e] : factor_integer(parts.squarefree)) {
        (void)e; // squarefree: every exponent is 1
        s.primes_.push_back(p);
    }
    uint32_t full = (1u << s.primes_.size()) - 1;
    s.coords_[full] = rational(parts.root);
    return s;
}

scalar scalar::sqrt_rational(const rational& r) {
    if (r.sign() < 0)
        throw math_error("scalar: square root of a negative rational");
    // sqrt(p/q) = sqrt(p*q)/q
    return sqrt_int(r.num() * r.den()) * scalar(rational(bigint(1), r.den()));
}

rational scalar::rational_value() const {
    if (!is_rational())
        throw precondition_error("scalar: rational_value on an irrational element");
    if (coords_.empty())
        return rational(0);
    return coords_.begin()->second;
}

scalar scalar::operator-() const {
    scalar r(*this);
    for (auto& [m, c] : r.coords_)
        c = -c;
    return r;
}

scalar& scalar::operator+=(const scalar& o) {
    scalar rhs(o);
    align(*this, rhs);
    for (const auto& [m, c] : rhs.coords_)
        coords_[m] += c;
    normalize();
    return *this;
}

scalar& scalar::operator-=(const scalar& o) { return *this += -o; }

scalar operator*(const scalar& a, const scalar& b) {
    scalar x(a), y(b);
    scalar::align(x, y);
    scalar out;
    out.primes_ = x.primes_;
    for (const auto& [m1, c1] : x.coords_) {
        for (const auto& [m2, c2] : y.coords_) {
            uint32_t common = m1 & m2;
            rational factor = c1 * c2;
            for (size_t i = 0; i < x.primes_.size(); ++i)
                if (common & (1u << i))
                    factor *= rational(x.primes_[i]);
            out.coords_[m1 ^ m2] += factor;
        }
    }
    out.normalize();
    return out;
}

scalar scalar::inverse() const {
    if (is_zero())
        throw math_error("scalar: inverse of zero");
    if (is_rational())
        return scalar(rational_value().reciprocal());
    // split on the highest radical: *this = a + b*sqrt(p), a and b in the
    // subfield, then 1/(a+b*sqrt(p)) = (a-b*sqrt(p)) / (a^2 - b^2 p)
    int k = static_cast<int>(primes_.size()) - 1;
    uint32_t bit = 1u << k;
    scalar a, b;
    a.primes_ = primes_;
    b.primes_ = primes_;
    for (const auto& [m, c] : coords_) {
        if (m & bit)
            b.coords_[m & ~bit] = c;
        else
            a.coords_[m] = c;
    }
    a.normalize();
    b.normalize();
    scalar root;
    root.primes_ = primes_;
    root.coords_[bit] = rational(1);
    scalar den = a * a - b * b * scalar(rational(primes_[static_cast<size_t>(k)]));
    if (den.is_zero())
        throw internal_error("scalar: conjugate norm vanished; field descriptor broken");
    return (a - b * root) * den.inverse();
}

scalar scalar::pow(long e) const {
    if (e == 0)
        return scalar(rational(1));
    scalar base = e > 0 ? *this : inverse();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    scalar acc(rational(1));
    while (k) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

int scalar::sign() const {
    if (coords_.empty())
        return 0;
    if (is_rational())
        return coords_.begin()->second.sign();
    if (coords_.size() == 1) {
        // single radical term: sign is the coefficient's sign
        return coords_.begin()->second.sign();
    }
    // per-prime isolating intervals, refined by Heron steps until the value's
    // interval excludes zero; the element is known nonzero, so this terminates
    std::vector<qinterval> iv(primes_.size());
    for (size_t i = 0; i < primes_.size(); ++i) {
        bigint r;
        mpz_sqrt(r.get_mpz_t(), primes_[i].get_mpz_t());
        iv[i] = {rational(r), rational(r + 1)}; // primes are never squares
    }
    auto refine = [&](qinterval& j, const bigint& p) {
        // hi' = (hi + p/hi)/2 >= sqrt(p); lo' = p/hi' <= sqrt(p)
        rational hi = (j.hi + rational(p) / j.hi) * rational(1, 2);
        j = {rational(p) / hi, hi};
    };
    for (int round = 0; round < 64; ++round) {
        qinterval total{rational(0), rational(0)};
        for (const auto& [m, c] : coords_) {
            qinterval term{rational(1), rational(1)};
            for (size_t i = 0; i < primes_.size(); ++i)
                if (m & (1u << i))
                    term = mul_pos(term, iv[i]);
            if (c.sign() >= 0)
                term = {c * term.lo, c * term.hi};
            else
                term = {c * term.hi, c * term.lo};
            total = {total.lo + term.lo, total.hi + term.hi};
        }
        if (total.lo.sign() > 0)
            return 1;
        if (total.hi.sign() < 0)
            return -1;
        for (size_t i = 0; i < primes_.size(); ++i) {
            refine(iv[i], primes_[i]);
            refine(iv[i], primes_[i]);
        }
    }
    throw internal_error("scalar: sign refinement failed to separate from zero");
}

bigint scalar::floor() const {
    if (is_rational())
        return is_zero() ? bigint(0) : rational_value().floor();
    // start from a double estimate, then fix up with exact sign tests; the
    // value is irrational so it never sits on an integer boundary
    double est = to_double();
    bigint cand;
    mpz_set_d(cand.get_mpz_t(), std::floor(est));
    while ((*this - scalar(rational(cand))).sign() < 0)
        cand -= 1;
    while ((*this - scalar(rational(cand + 1))).sign() >= 0)
        cand += 1;
    return cand;
}

double scalar::to_double() const {
    double acc = 0;
    for (const auto& [m, c] : coords_) {
        double t = c.to_double();
        for (size_t i = 0; i < primes_.size(); ++i)
            if (m & (1u << i))
                t *= std::sqrt(primes_[i].get_d());
        acc += t;
    }
    return acc;
}

bigint scalar::radicand_product(uint32_t mask) const {
    bigint prod = 1;
    for (size_t i = 0; i < primes_.size(); ++i)
        if (mask & (1u << i))
            prod *= primes_[i];
    return prod;
}

std::string scalar::str() const {
    if (coords_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : coords_) {
        rational a = c.abs();
        std::string term;
        if (m == 0) {
            term = a.str();
        } else {
            std::string rad = "sqrt(" + radicand_product(m).get_str() + ")";
            term = a.is_one() ? rad : a.str() + "*" + rad;
        }
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (c.sign() < 0 ? "-" : "+") + term;
        }
    }
    return out;
}

} // namespace antlyzer
