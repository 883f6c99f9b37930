#include <algorithm>

#include "antlyzer/int_factor.hpp"
#include "antlyzer/poly.hpp"

namespace antlyzer {

scalar_poly to_scalar_poly(const unipoly& p) {
    std::vector<scalar> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (const auto& r : p.coeffs())
        c.emplace_back(r);
    return scalar_poly(std::move(c));
}

std::vector<std::pair<unipoly, int>> squarefree_decomposition(const unipoly& p) {
    if (p.is_zero() || !(p.lead() == rational(1)))
        throw precondition_error("squarefree_decomposition: monic nonzero input required");
    std::vector<std::pair<unipoly, int>> out;
    if (p.degree() == 0)
        return out;
    // Yun's algorithm; all intermediate gcds are taken monic
    unipoly a = poly_gcd(p, p.derivative());
    if (a.degree() == 0)
        return {{p, 1}};
    unipoly b = p / a;
    unipoly c = p.derivative() / a;
    unipoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        unipoly g = poly_gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        d = (d / g) - b.derivative();
    }
    return out;
}

namespace {

// monic rational h(x) -> monic integer H(y) with y = L*x, H(y) = L^d h(y/L)
struct integerized {
    std::vector<bigint> coeffs; // lowest first, lead == 1
    bigint scale;               // L
};

integerized integerize_monic(const unipoly& h) {
    bigint L = 1;
    for (const auto& c : h.coeffs())
        L = lcm(L, c.den());
    size_t d = static_cast<size_t>(h.degree());
    std::vector<bigint> out(d + 1);
    bigint Lk = 1; // L^(d-i), built from the top down
    for (size_t i = d + 1; i-- > 0;) {
        const rational c = h.coeff(i);
        out[i] = c.num() * (Lk / c.den()); // c * L^(d-i), exact
        Lk *= L;
    }
    return {std::move(out), L};
}

unipoly monic_back(const std::vector<bigint>& g, const bigint& L) {
    // G(y) monic integer, y = L*x: g(x) = G(Lx) / L^deg
    size_t d = g.size() - 1;
    std::vector<rational> out(d + 1);
    bigint Li = 1; // L^i
    bigint Ld = 1;
    for (size_t i = 0; i < d; ++i)
        Ld *= L;
    for (size_t i = 0; i <= d; ++i) {
        out[i] = rational(g[i] * Li, Ld);
        Li *= L;
    }
    return unipoly(std::move(out));
}

bigint ipoly_eval(const std::vector<bigint>& c, const bigint& x) {
    bigint acc = 0;
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

// exact division of monic integer polys; returns nullopt if not divisible
std::optional<std::vector<bigint>> ipoly_divide(const std::vector<bigint>& a,
                                                const std::vector<bigint>& b) {
    if (a.size() < b.size())
        return std::nullopt;
    std::vector<bigint> rem = a, quo(a.size() - b.size() + 1);
    for (size_t i = quo.size(); i-- > 0;) {
        bigint q = rem[i + b.size() - 1]; // b monic
        quo[i] = q;
        if (sgn(q) != 0)
            for (size_t j = 0; j < b.size(); ++j)
                rem[i + j] -= q * b[j];
    }
    for (size_t j = 0; j + 1 < b.size(); ++j)
        if (sgn(rem[j]) != 0)
            return std::nullopt;
    return quo;
}

// complete split of a monic integer quartic with no rational roots into two
// monic integer quadratics, if one exists: enumerate divisor pairs q*s = a0,
// recover p+r and p*r, check the cross term
std::optional<std::vector<bigint>> quartic_quadratic_factor(const std::vector<bigint>& f) {
    const bigint &a0 = f[0], &a1 = f[1], &a2 = f[2], &a3 = f[3];
    for (const bigint& d : positive_divisors(a0)) {
        for (int sign_q : {1, -1}) {
            bigint q = sign_q * d;
            if (a0 % q != 0)
                continue;
            bigint s = a0 / q;
            bigint pr = a2 - q - s;
            bigint disc = a3 * a3 - 4 * pr;
            if (sgn(disc) < 0)
                continue;
            bigint root;
            mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
            if (root * root != disc)
                continue;
            bigint p2 = a3 + root;
            if (p2 % 2 != 0)
                continue;
            bigint p = p2 / 2, r = a3 - p;
            if (p * s + q * r != a1)
                continue;
            return std::vector<bigint>{q, p, bigint(1)};
        }
    }
    return std::nullopt;
}

// Kronecker-style search for a monic integer quadratic factor of a monic
// integer polynomial with no rational roots: a factor h satisfies
// h(0) | f(0), h(1) | f(1), h(-1) | f(-1); interpolate candidates from
// divisor pairs and trial-divide. budget caps the enumeration; at desk scale
// it is never reached.
std::optional<std::vector<bigint>> kronecker_quadratic_factor(const std::vector<bigint>& f,
                                                              long budget, bool& exhausted) {
    bigint v0 = ipoly_eval(f, 0), v1 = ipoly_eval(f, 1), v2 = ipoly_eval(f, -1);
    auto d0 = positive_divisors(v0);
    auto d1 = positive_divisors(v1);
    long tried = 0;
    for (const bigint& dc : d0) {
        for (int sc : {1, -1}) {
            bigint c = sc * dc;
            for (const bigint& de : d1) {
                for (int se : {1, -1}) {
                    if (++tried > budget) {
                        exhausted = true;
                        return std::nullopt;
                    }
                    bigint e = se * de;      // candidate h(1)
                    bigint b = e - 1 - c;    // h = y^2 + b y + c
                    bigint hm = 1 - b + c;   // h(-1)
                    if (sgn(hm) == 0 || v2 % hm != 0)
                        continue;
                    auto quo = ipoly_divide(f, {c, b, bigint(1)});
                    if (quo)
                        return std::vector<bigint>{c, b, bigint(1)};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

factorization factor_over_q(const unipoly& p) {
    if (p.is_zero() || p.degree() < 1 || !(p.lead() == rational(1)))
        throw precondition_error("factor_over_q: monic polynomial of degree >= 1 required");

    factorization out;
    auto push = [&](const unipoly& f, int mult) {
        out.factors.emplace_back(f, mult);
        if (f.degree() >= 3 && !out.too_high)
            out.too_high = f;
    };

    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        auto [ic, L] = integerize_monic(part);
        std::vector<bigint> rem = ic;

        // zero root (at most one: part is squarefree)
        if (sgn(rem[0]) == 0) {
            push(unipoly::x(), mult);
            rem.erase(rem.begin());
        }

        // integer roots of the monic integer polynomial divide the constant term
        if (rem.size() > 1 && sgn(rem[0]) != 0) {
            std::vector<bigint> roots;
            for (const bigint& d : positive_divisors(rem[0])) {
                for (int s : {1, -1}) {
                    bigint r = s * d;
                    if (sgn(ipoly_eval(rem, r)) == 0)
                        roots.push_back(r);
                }
            }
            std::sort(roots.begin(), roots.end());
            for (const bigint& r : roots) {
                auto quo = ipoly_divide(rem, {-r, bigint(1)});
                if (!quo)
                    throw internal_error("factor_over_q: root does not divide");
                rem = *quo;
                // y = L*x, root r in y means root r/L in x
                push(unipoly({-rational(r, L), rational(1)}), mult);
            }
        }

        // rem now has no rational roots; peel quadratic factors
        while (rem.size() - 1 >= 2) {
            size_t deg = rem.size() - 1;
            if (deg == 2 || deg == 3) {
                // no rational roots: degree 2 and 3 are irreducible
                push(monic_back(rem, L), mult);
                break;
            }
            std::optional<std::vector<bigint>> q;
            bool exhausted = false;
            if (deg == 4)
                q = quartic_quadratic_factor(rem);
            else
                q = kronecker_quadratic_factor(rem, 4000000, exhausted);
            if (!q) {
                // no quadratic (or search exhausted): every irreducible factor
                // of what is left has degree >= 3; carry it as one block
                push(monic_back(rem, L), mult);
                break;
            }
            push(monic_back(*q, L), mult);
            rem = *ipoly_divide(rem, *q);
        }
    }

    // deterministic order: by degree, then lexicographic coefficients
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        for (long i = 0; i <= a.first.degree(); ++i) {
            if (a.first.coeff(static_cast<size_t>(i)) != b.first.coeff(static_cast<size_t>(i)))
                return a.first.coeff(static_cast<size_t>(i)) < b.first.coeff(static_cast<size_t>(i));
        }
        return false;
    });
    // merge equal factors (defensive; squarefree parts are pairwise coprime)
    std::vector<std::pair<unipoly, int>> merged;
    for (auto& fm : out.factors) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(fm);
    }
    out.factors = std::move(merged);

    // postcondition: the factors multiply back to p exactly
    unipoly prod = unipoly::constant(rational(1));
    for (const auto& [f, m] : out.factors)
        prod = prod * f.pow(static_cast<unsigned>(m));
    if (!(prod == p))
        throw internal_error("factor_over_q: factor product mismatch");
    return out;
}

} // namespace antlyzer
