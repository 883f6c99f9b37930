#include "antlyzer/spectrum.hpp"

#include <numeric>

namespace antlyzer {

namespace {

void verify_projector_algebra(const spectrum_info& s) {
    size_t n = s.n;
    matrix sum(n, n);
    for (const auto& c : s.classes)
        sum = sum + c.projector;
    if (!(sum == matrix::identity(n)))
        throw internal_error("decompose: projectors do not sum to identity");
    for (size_t i = 0; i < s.classes.size(); ++i) {
        const matrix& pi = s.classes[i].projector;
        if (!(pi * pi == pi))
            throw internal_error("decompose: projector not idempotent");
        for (size_t j = i + 1; j < s.classes.size(); ++j) {
            matrix prod = pi * s.classes[j].projector;
            if (!(prod == matrix(n, n)))
                throw internal_error("decompose: projectors not orthogonal");
        }
    }
}

} // namespace

spectrum_result decompose(const matrix& a) {
    if (!a.is_square())
        throw precondition_error("decompose: square matrix required");
    unipoly chi = char_poly(a);
    factorization f = factor_over_q(chi);
    if (f.too_high)
        return {std::nullopt, f.too_high};

    spectrum_info s;
    s.n = a.rows();
    scalar_poly schi = to_scalar_poly(chi);

    for (const auto& [q, m] : f.factors) {
        if (q.degree() == 1) {
            rational t = -q.coeff(0); // q = x - t
            eigen_class c;
            c.kind = eigen_kind::rational_real;
            c.factor = q;
            c.multiplicity = m;
            c.value = scalar(t);
            c.module_sq = scalar(t * t);
            c.space_dim = m;
            scalar_poly sq = to_scalar_poly(q);
            scalar_poly rest = schi / sq.pow(static_cast<unsigned>(m));
            c.projector = spectral_projector(a, sq, m, rest);
            s.classes.push_back(std::move(c));
            continue;
        }
        // irreducible quadratic x^2 + c1 x + c0
        rational c1 = q.coeff(1), c0 = q.coeff(0);
        rational disc = c1 * c1 - rational(4) * c0;
        if (disc.sign() > 0) {
            // two real conjugate roots (-c1 +- sqrt(disc)) / 2, one class each
            scalar root_disc = scalar::sqrt_rational(disc);
            for (int which : {1, -1}) {
                scalar t = (scalar(-c1) + (which > 0 ? root_disc : -root_disc)) *
                           scalar(rational(1, 2));
                eigen_class c;
                c.kind = eigen_kind::quadratic_real;
                c.factor = q;
                c.multiplicity = m;
                c.value = t;
                c.module_sq = t * t;
                c.space_dim = m;
                // char poly = (x - t)^m * rest over Q(sqrt(disc))
                std::vector<scalar> lin{scalar() - t, scalar(rational(1))};
                scalar_poly sq(std::move(lin));
                scalar_poly rest = schi / sq.pow(static_cast<unsigned>(m));
                c.projector = spectral_projector(a, sq, m, rest);
                s.classes.push_back(std::move(c));
            }
        } else {
            // conjugate complex pair; disc == 0 cannot happen (q irreducible)
            eigen_class c;
            c.kind = eigen_kind::complex_pair;
            c.factor = q;
            c.multiplicity = m;
            c.trace_s = -c1;
            c.norm_p = c0;
            c.module_sq = scalar(c0);
            c.space_dim = 2 * m;
            scalar_poly sq = to_scalar_poly(q);
            scalar_poly rest = schi / sq.pow(static_cast<unsigned>(m));
            c.projector = spectral_projector(a, sq, m, rest);
            s.classes.push_back(std::move(c));
        }
    }

    size_t dim_sum = 0;
    for (const auto& c : s.classes)
        dim_sum += static_cast<size_t>(c.space_dim);
    if (dim_sum != s.n)
        throw internal_error("decompose: class dimensions do not sum to n");
    verify_projector_algebra(s);
    return {std::move(s), std::nullopt};
}

std::optional<int> unity_order(const eigen_class& c) {
    if (c.is_zero())
        throw precondition_error("unity_order: zero eigenvalue has no angular order");
    if (c.kind != eigen_kind::complex_pair)
        return c.value.sign() > 0 ? 1 : 2;

    const rational& s = c.trace_s;
    const rational& p = c.norm_p;
    // w = mu/conj(mu) = mu^2/p has |w| = 1; its trace is (s^2 - 2p)/p and its
    // minimal polynomial is x^2 - tr x + 1 (or x + 1 when w = -1). w is a root
    // of unity iff that polynomial is cyclotomic with phi(order) <= 2.
    rational tr = (s * s - rational(2) * p) / p;
    int m;
    if (tr == rational(-2))
        m = 2; // w = -1 (s == 0)
    else if (tr == rational(-1))
        m = 3;
    else if (tr == rational(0))
        m = 4;
    else if (tr == rational(1))
        m = 6;
    else
        return std::nullopt;

    // mu has order m or 2m over the positive reals: mu^m is rational iff its
    // reduction a + b*mu mod the factor has b = 0; return m iff mu^m > 0
    unipoly xm = unipoly::x().pow(static_cast<unsigned>(m)) % c.factor;
    rational b = xm.coeff(1), a0 = xm.coeff(0);
    if (b.is_zero() && a0.sign() > 0)
        return m;
    return 2 * m;
}

assumption_report check_assumption_h(const spectrum_info& s) {
    for (const auto& c : s.classes) {
        if (c.kind != eigen_kind::complex_pair && c.value.sign() < 0)
            return {false, "negative real eigenvalue, factor " + c.factor.str()};
    }
    for (size_t i = 0; i < s.classes.size(); ++i) {
        const auto& ci = s.classes[i];
        if (ci.kind == eigen_kind::complex_pair || ci.value.sign() <= 0)
            continue;
        for (size_t j = 0; j < s.classes.size(); ++j) {
            if (j == i)
                continue;
            if (ci.module_sq == s.classes[j].module_sq)
                return {false, "positive eigenvalue of factor " + ci.factor.str() +
                                   " shares its module with factor " +
                                   s.classes[j].factor.str()};
        }
    }
    return {};
}

assumption_report check_assumption_g(const spectrum_info& s) {
    for (size_t i = 0; i < s.classes.size(); ++i) {
        const auto& ci = s.classes[i];
        if (ci.is_zero())
            continue;
        for (size_t j = i + 1; j < s.classes.size(); ++j) {
            const auto& cj = s.classes[j];
            if (cj.is_zero() || !(ci.module_sq == cj.module_sq))
                continue;
            bool ri = unity_order(ci).has_value();
            bool rj = unity_order(cj).has_value();
            if (ri != rj)
                return {false, "equal-module classes split on positive-power membership: " +
                                   ci.factor.str() + " vs " + cj.factor.str()};
        }
    }
    return {};
}

assumption_report check_assumption_a(const spectrum_info& s) {
    assumption_report g = check_assumption_g(s);
    if (!g.pass)
        return g;
    for (const auto& c : s.classes) {
        if (c.is_zero())
            continue;
        if (c.module_sq == scalar(rational(1)) && !unity_order(c).has_value())
            return {false, "module-1 class without a positive power, factor " + c.factor.str()};
    }
    return {};
}

long power_period_n(const matrix& a, const spectrum_info& s) {
    long n = 1;
    for (const auto& c : s.classes) {
        if (c.is_zero())
            continue;
        if (auto o = unity_order(c))
            n = std::lcm(n, static_cast<long>(*o));
    }
    // Verified conclusion: A^N has no rotation left, i.e. passes (H). This
    // holds whenever A satisfies the all-or-none module condition; calling it
    // on a matrix that violates (G) surfaces here.
    spectrum_result power = decompose(mat_pow(a, static_cast<unsigned long>(n)));
    if (!power.supported())
        throw internal_error("power_period_n: A^N spectrum left the supported tier");
    assumption_report h = check_assumption_h(*power.info);
    if (!h.pass)
        throw error("power_period_n: A^N fails the nonnegative-spectrum condition (" + h.detail +
                    "); the input matrix violates the all-or-none module assumption");
    return n;
}

} // namespace antlyzer
