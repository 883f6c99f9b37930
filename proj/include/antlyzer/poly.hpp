#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antlyzer/error.hpp"
#include "antlyzer/rational.hpp"
#include "antlyzer/scalar.hpp"

namespace antlyzer {

// dense univariate polynomial over an exact field K (rational or scalar),
// coefficients lowest-degree first, no trailing zeros (empty vector == 0)
template <class K>
class basic_poly {
  public:
    basic_poly() = default;
    explicit basic_poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static basic_poly constant(const K& k) { return basic_poly(std::vector<K>{k}); }
    static basic_poly x() { return basic_poly(std::vector<K>{K(0), K(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& lead() const {
        if (c_.empty())
            throw precondition_error("poly: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend basic_poly operator+(const basic_poly& a, const basic_poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i)
            r[i] = r[i] + b.c_[i];
        return basic_poly(std::move(r));
    }
    friend basic_poly operator-(const basic_poly& a, const basic_poly& b) {
        return a + (-b);
    }
    basic_poly operator-() const {
        std::vector<K> r(c_);
        for (auto& k : r)
            k = K(0) - k;
        return basic_poly(std::move(r));
    }
    friend basic_poly operator*(const basic_poly& a, const basic_poly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return basic_poly(std::move(r));
    }
    basic_poly scaled(const K& k) const {
        std::vector<K> r(c_);
        for (auto& v : r)
            v = v * k;
        return basic_poly(std::move(r));
    }

    // exact euclidean division; throws on zero divisor
    friend std::pair<basic_poly, basic_poly> divmod(const basic_poly& a, const basic_poly& b) {
        if (b.is_zero())
            throw math_error("poly: division by zero polynomial");
        basic_poly rem = a, quo;
        quo.c_.assign(a.c_.size(), K(0));
        K inv_lead = K(1) / b.lead();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(rem.degree() - b.degree());
            K q = rem.lead() * inv_lead;
            quo.c_[shift] = q;
            // rem -= q * x^shift * b
            for (size_t i = 0; i < b.c_.size(); ++i)
                rem.c_[shift + i] = rem.c_[shift + i] - q * b.c_[i];
            rem.trim();
        }
        quo.trim();
        return {quo, rem};
    }
    friend basic_poly operator/(const basic_poly& a, const basic_poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw math_error("poly: inexact division");
        return q;
    }
    friend basic_poly operator%(const basic_poly& a, const basic_poly& b) {
        return divmod(a, b).second;
    }

    basic_poly derivative() const {
        if (c_.size() <= 1)
            return {};
        std::vector<K> r(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * K(static_cast<long>(i));
        return basic_poly(std::move(r));
    }

    basic_poly monic() const {
        if (is_zero())
            throw precondition_error("poly: monic of zero");
        return scaled(K(1) / lead());
    }

    K eval(const K& v) const { // Horner
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;)
            acc = acc * v + c_[i];
        return acc;
    }

    basic_poly pow(unsigned e) const {
        basic_poly acc = constant(K(1)), base = *this;
        while (e) {
            if (e & 1)
                acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const basic_poly& a, const basic_poly& b) {
        if (a.c_.size() != b.c_.size())
            return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i]))
                return false;
        return true;
    }
    friend bool operator!=(const basic_poly& a, const basic_poly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && c_.back() == K(0))
            c_.pop_back();
    }
};

using unipoly = basic_poly<rational>;
using scalar_poly = basic_poly<scalar>;

// monic gcd via the euclidean algorithm over the field
template <class K>
basic_poly<K> poly_gcd(basic_poly<K> a, basic_poly<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero())
        return a;
    return a.monic();
}

// extended euclid: g = u*a + v*b with g monic (or zero)
template <class K>
struct poly_xgcd_result {
    basic_poly<K> g, u, v;
};
template <class K>
poly_xgcd_result<K> poly_xgcd(const basic_poly<K>& a, const basic_poly<K>& b) {
    basic_poly<K> r0 = a, r1 = b;
    basic_poly<K> u0 = basic_poly<K>::constant(K(1)), u1;
    basic_poly<K> v0, v1 = basic_poly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        auto u2 = u0 - q * u1;
        u0 = u1;
        u1 = u2;
        auto v2 = v0 - q * v1;
        v0 = v1;
        v1 = v2;
    }
    if (r0.is_zero())
        return {r0, u0, v0};
    K scale = K(1) / r0.lead();
    return {r0.scaled(scale), u0.scaled(scale), v0.scaled(scale)};
}

template <class K>
std::string basic_poly<K>::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == K(0))
            continue;
        std::string term;
        if constexpr (std::is_same_v<K, rational>) {
            rational a = c_[i].abs();
            bool neg = c_[i].sign() < 0;
            if (i == 0)
                term = a.str();
            else
                term = (a.is_one() ? "" : a.str() + "*") + var +
                       (i == 1 ? "" : "^" + std::to_string(i));
            if (out.empty())
                out = (neg ? "-" : "") + term;
            else
                out += (neg ? "-" : "+") + term;
        } else {
            term = "(" + c_[i].str() + ")";
            if (i > 0)
                term += "*" + var + (i == 1 ? "" : "^" + std::to_string(i));
            out += (out.empty() ? "" : "+") + term;
        }
    }
    return out;
}

// ---- rational-coefficient specifics (implemented in unipoly.cpp) ----

// squarefree decomposition: p = prod parts[i].first ^ parts[i].second with each
// part squarefree and pairwise coprime (Yun's algorithm); p monic
std::vector<std::pair<unipoly, int>> squarefree_decomposition(const unipoly& p);

// irreducible factorization over Q for the supported tier.
// factors lists every irreducible monic factor with multiplicity and always
// multiplies back to p exactly. When some irreducible factor has degree >= 3
// the spectrum is outside the supported tier: too_high points at (one of) the
// offending factors. That is a classification, not a failure.
struct factorization {
    std::vector<std::pair<unipoly, int>> factors;
    std::optional<unipoly> too_high;
};
factorization factor_over_q(const unipoly& p); // pre: p monic, degree >= 1

// embed a rational polynomial into scalar coefficients
scalar_poly to_scalar_poly(const unipoly& p);

} // namespace antlyzer
