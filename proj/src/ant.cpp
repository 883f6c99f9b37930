#include "antlyzer/ant.hpp"

#include <algorithm>

#include "antlyzer/error.hpp"

namespace antlyzer {

namespace {

// rows g . A^k . P for k = 0..count-1
std::vector<std::vector<scalar>> iterate_rows(const row_form& f, const matrix& a,
                                              const matrix& p, size_t count) {
    std::vector<std::vector<scalar>> rows;
    rows.reserve(count);
    std::vector<scalar> g = f.coeffs;
    for (size_t k = 0; k < count; ++k) {
        rows.push_back(p.transpose().apply(g)); // g . P as a row
        if (k + 1 < count) g = a.transpose().apply(g);
    }
    return rows;
}

scalar int_pow(long base, size_t e) {
    scalar out(1);
    for (size_t i = 0; i < e; ++i) out = out * scalar(base);
    return out;
}

} // namespace

std::vector<row_form> coefficient_forms(const row_form& f, const matrix& a,
                                        const eigen_class& c) {
    if (!f.is_homogeneous())
        throw precondition_error("coefficient maps are defined for homogeneous guard rows");
    if (c.kind == eigen_kind::complex_pair || c.is_zero())
        throw precondition_error("coefficient maps require a nonzero real eigenvalue class");
    const size_t d = static_cast<size_t>(c.multiplicity);
    const size_t n = a.rows();

    // e_k := f(A^k pi x) = (sum_i alpha_i(x) k^i) t^k for k = 0..d-1; the
    // k-grid Vandermonde system recovers the alpha_i exactly.
    const auto rows = iterate_rows(f, a, c.projector, d);
    matrix v(d, d);
    for (size_t k = 0; k < d; ++k) {
        const scalar tk = c.value.pow(static_cast<long>(k));
        for (size_t i = 0; i < d; ++i)
            v.at(k, i) = tk * int_pow(static_cast<long>(k), i);
    }

    std::vector<row_form> alphas(d);
    for (auto& al : alphas) al.coeffs.assign(n, scalar(0));
    for (size_t j = 0; j < n; ++j) {
        std::vector<scalar> rhs;
        rhs.reserve(d);
        for (size_t k = 0; k < d; ++k) rhs.push_back(rows[k][j]);
        auto y = solve_linear(v, rhs);
        if (!y)
            throw internal_error("coefficient maps: singular Vandermonde system");
        for (size_t i = 0; i < d; ++i) alphas[i].coeffs[j] = (*y)[i];
    }
    return alphas;
}

std::vector<row_form> vanishing_constraints(const row_form& f, const matrix& a,
                                            const eigen_class& c) {
    if (!f.is_homogeneous())
        throw precondition_error("vanishing constraints are defined for homogeneous guard rows");
    if (c.kind != eigen_kind::complex_pair && !c.is_zero())
        return coefficient_forms(f, a, c);
    // The class contribution u_k = f(A^k pi x) obeys a linear recurrence of
    // order space_dim (the char. polynomial of A on the invariant subspace),
    // so it vanishes for all k iff its first space_dim terms do.
    const auto rows = iterate_rows(f, a, c.projector, static_cast<size_t>(c.space_dim));
    std::vector<row_form> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(r);
    return out;
}

namespace {

std::vector<const eigen_class*> positive_classes_desc(const spectrum_info& info) {
    std::vector<const eigen_class*> pos;
    for (const auto& c : info.classes)
        if (c.kind != eigen_kind::complex_pair && !c.is_zero() && c.value.sign() > 0)
            pos.push_back(&c);
    std::sort(pos.begin(), pos.end(),
              [](const eigen_class* x, const eigen_class* y) { return cmp(x->value, y->value) > 0; });
    return pos;
}

linear_constraint to_constraint(const row_form& r, relation rel) {
    linear_constraint c;
    c.coeffs = r.coeffs;
    c.constant = r.constant;
    c.rel = rel;
    return c;
}

// single-guard ANT for a decomposed positive-shape matrix
semilinear_set ant_single_guard(const matrix& a, const spectrum_info& info, const row_form& f) {
    const size_t n = a.rows();
    semilinear_set out = sls_empty(n);
    const auto pos = positive_classes_desc(info);

    for (const auto* tc : pos) {
        // equalities shared by every degree: all strictly higher modules mute
        std::vector<linear_constraint> higher;
        for (const auto& c : info.classes) {
            if (&c == tc || cmp(c.module_sq, tc->module_sq) <= 0) continue;
            for (const auto& r : vanishing_constraints(f, a, c))
                higher.push_back(to_constraint(r, relation::eq));
        }
        const auto alphas = coefficient_forms(f, a, *tc);
        const size_t d = alphas.size();
        for (size_t l = 0; l < d; ++l) {
            conjunct cj;
            cj.constraints = higher;
            for (size_t i = l + 1; i < d; ++i)
                cj.constraints.push_back(to_constraint(alphas[i], relation::eq));
            cj.constraints.push_back(to_constraint(alphas[l], relation::gt));
            out.disjuncts.push_back(std::move(cj));
        }
    }
    // normalization drops a disjunct whose strict row is syntactically zero
    return sls_union(out, sls_empty(n));
}

semilinear_set ant_positive_decomposed(const matrix& a, const spectrum_info& info,
                                       const std::vector<row_form>& guards) {
    if (const auto h = check_assumption_h(info); !h.pass)
        throw precondition_error(
            "positive-shape construction needs positive, module-unique real eigenvalues: " +
            h.detail);
    semilinear_set acc = sls_universe(a.rows());
    for (const auto& f : guards)
        acc = sls_intersect(acc, ant_single_guard(a, info, f));
    return acc;
}

spectrum_info decompose_or_throw(const matrix& a) {
    auto sp = decompose(a);
    if (!sp.supported())
        throw unsupported_error("spectrum outside the supported class: irreducible factor " +
                                sp.offending->str("x"));
    return *sp.info;
}

} // namespace

semilinear_set ant_homogeneous_positive(const matrix& a, const std::vector<row_form>& guards) {
    return ant_positive_decomposed(a, decompose_or_throw(a), guards);
}

semilinear_set ant_homogeneous(const matrix& a, const std::vector<row_form>& guards) {
    const auto info = decompose_or_throw(a);
    if (const auto g = check_assumption_g(info); !g.pass)
        throw precondition_error("eigenvalues of equal module disagree about positive powers; "
                                 "the power-period reduction does not apply: " +
                                 g.detail);
    const long n_period = power_period_n(a, info);
    if (n_period == 1) return ant_positive_decomposed(a, info, guards);

    const matrix b = mat_pow(a, static_cast<unsigned long>(n_period));
    const auto info_b = decompose_or_throw(b);
    const auto powers = mat_power_table(a, static_cast<size_t>(n_period - 1));

    semilinear_set acc = sls_universe(a.rows());
    for (long l = 0; l < n_period; ++l) {
        std::vector<row_form> shifted;
        shifted.reserve(guards.size());
        for (const auto& f : guards) shifted.push_back(f.after(powers[static_cast<size_t>(l)]));
        acc = simplify_over_reals(
            sls_intersect(acc, ant_positive_decomposed(b, info_b, shifted)));
        if (acc.disjuncts.empty()) break;
    }
    return acc;
}

matrix homogenize_update(const matrix& a, const std::vector<scalar>& c) {
    if (!a.is_square() || a.rows() != c.size())
        throw precondition_error("homogenization: shape mismatch between matrix and offset");
    const size_t n = a.rows();
    matrix h(n + 1, n + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) h.at(i, j) = a.at(i, j);
        h.at(i, n) = c[i];
    }
    h.at(n, n) = scalar(1);
    return h;
}

semilinear_set ant_affine(const matrix& a, const std::vector<scalar>& c,
                          const std::vector<row_form>& guards) {
    const size_t n = a.rows();
    const matrix h = homogenize_update(a, c);

    std::vector<row_form> lifted;
    lifted.reserve(guards.size());
    for (const auto& f : guards) {
        row_form g;
        g.coeffs = f.coeffs;
        g.coeffs.push_back(f.constant); // the constant becomes the t-coefficient
        g.constant = scalar(0);
        lifted.push_back(std::move(g));
    }

    const semilinear_set up = ant_homogeneous(h, lifted);

    // pin t = 1: the last coordinate of every row folds into the constant
    semilinear_set out;
    out.dimension = n;
    for (const auto& d : up.disjuncts) {
        conjunct cj;
        cj.constraints.reserve(d.constraints.size());
        for (const auto& cons : d.constraints) {
            linear_constraint low;
            low.rel = cons.rel;
            low.coeffs.assign(cons.coeffs.begin(), cons.coeffs.begin() + static_cast<long>(n));
            low.constant = cons.constant + cons.coeffs[n];
            cj.constraints.push_back(std::move(low));
        }
        out.disjuncts.push_back(std::move(cj));
    }
    return sls_union(out, sls_empty(n)); // re-canonicalize in the sliced dimension
}

} // namespace antlyzer
